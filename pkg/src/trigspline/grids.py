"""Uniform periodic grids on [0, 2pi).

Two node families are supported. Indicator 0 starts at the origin,
indicator 1 is shifted by half a step::

    x_j = 2 pi (j - 1) / N          (I = 0)
    x_j = pi (2 j - 1) / N          (I = 1)

Node indices are 1-based everywhere in the public interface.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["GridSpec", "node", "nodes"]


@dataclass(frozen=True)
class GridSpec:
    """Odd node count ``N = 2n + 1`` plus grid indicator ``I``."""

    n_nodes: int
    indicator: int = 0

    def __post_init__(self):
        n_nodes, indicator = self.n_nodes, self.indicator
        if isinstance(n_nodes, bool) or int(n_nodes) != n_nodes:
            raise TypeError(f"n_nodes must be an integer, got {n_nodes!r}")
        if n_nodes < 3 or n_nodes % 2 == 0:
            raise ValueError(f"n_nodes must be odd and >= 3, got {n_nodes}")
        if indicator not in (0, 1) or isinstance(indicator, bool):
            raise ValueError(f"grid indicator must be 0 or 1, got {indicator!r}")
        object.__setattr__(self, "n_nodes", int(n_nodes))
        object.__setattr__(self, "indicator", int(indicator))

    @property
    def half(self) -> int:
        """Highest harmonic ``n = (N - 1) / 2``."""
        return (self.n_nodes - 1) // 2

    @property
    def step(self) -> float:
        return 2.0 * np.pi / self.n_nodes

    def node(self, j: int) -> float:
        return node(self, j)

    def nodes(self) -> np.ndarray:
        return nodes(self)


def node(spec: GridSpec, j: int) -> float:
    """Position of the 1-based node `j` of `spec`."""
    if not 1 <= j <= spec.n_nodes:
        raise IndexError(f"node index j={j} out of range 1..{spec.n_nodes} (N={spec.n_nodes})")
    if spec.indicator == 0:
        return 2.0 * np.pi * (j - 1) / spec.n_nodes
    return np.pi * (2 * j - 1) / spec.n_nodes


def nodes(spec: GridSpec) -> np.ndarray:
    """All nodes of `spec` in ascending order, shape ``(N,)``."""
    j = np.arange(1, spec.n_nodes + 1)
    if spec.indicator == 0:
        return 2.0 * np.pi * (j - 1) / spec.n_nodes
    return np.pi * (2 * j - 1) / spec.n_nodes
