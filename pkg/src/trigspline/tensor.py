"""Multivariate trigonometric splines on [0, 2pi)^d.

Two constructions are available for two variables:

* polynomial form: take the bivariate interpolating polynomial and replace
  every ``cos kx``, ``sin kx`` (and likewise in y) by the spline cos- and
  sin-functions of that axis;
* fundamental form: ``sum_kl f_kl ts_k(x) ts_l(y)``.

Both give the same function. The fundamental form extends to any number
of variables and is the only route offered for d > 2.
"""

from dataclasses import dataclass

import numpy as np

from .fundamental import fundamental_basis
from .grids import GridSpec
from .splinekernel import DEFAULT_EPS, SplineParams, basis_tables
from .trigpoly import CoeffTable2D, SampleGrid

__all__ = [
    "TensorSplineConfig",
    "eval_2d_polyform",
    "eval_2d_fundform",
    "eval_nd_fundform",
    "polyform_lattice",
    "fundform_lattice",
]


@dataclass(frozen=True)
class TensorSplineConfig:
    """Per-axis node counts and orders with one shared grid indicator.

    `stitch_indicator` defaults to the interpolation indicator.
    """

    n_nodes: tuple
    indicator: int = 0
    orders: tuple = None
    stitch_indicator: int = None
    tail_tolerance: float = DEFAULT_EPS

    def __post_init__(self):
        n_nodes = tuple(int(N) for N in np.atleast_1d(self.n_nodes))
        if not n_nodes:
            raise ValueError("at least one axis is required")
        orders = (1,) * len(n_nodes) if self.orders is None else tuple(np.atleast_1d(self.orders))
        if len(orders) == 1 and len(n_nodes) > 1:
            orders = orders * len(n_nodes)
        if len(orders) != len(n_nodes):
            raise ValueError(f"got {len(orders)} orders for {len(n_nodes)} axes")
        stitch = self.indicator if self.stitch_indicator is None else self.stitch_indicator
        object.__setattr__(self, "n_nodes", n_nodes)
        object.__setattr__(self, "orders", tuple(int(r) for r in orders))
        object.__setattr__(self, "stitch_indicator", stitch)
        # validate everything through the per-axis objects
        self.specs
        for a in range(self.ndim):
            self.axis_params(a)

    @property
    def ndim(self) -> int:
        return len(self.n_nodes)

    @property
    def specs(self) -> tuple:
        return tuple(GridSpec(N, self.indicator) for N in self.n_nodes)

    def axis_params(self, axis: int) -> SplineParams:
        return SplineParams(
            stitch_indicator=self.stitch_indicator,
            interp_indicator=self.indicator,
            order=self.orders[axis],
            tail_tolerance=self.tail_tolerance,
        )

    def check_samples(self, samples: SampleGrid):
        if samples.specs != self.specs:
            raise ValueError(
                f"samples on grids {[(s.n_nodes, s.indicator) for s in samples.specs]} do not match "
                f"config grids {[(s.n_nodes, s.indicator) for s in self.specs]}"
            )


def _padded_basis(params, N, t, method):
    """Cs/Ss tables with a k = 0 column (1 for cosine, 0 for sine)."""
    cs, ss = basis_tables(params, N, t, method)
    one = np.ones(cs.shape[:-1] + (1,))
    return np.concatenate([one, cs], axis=-1), np.concatenate([0.0 * one, ss], axis=-1)


def _check_2d(config, gx, gy):
    if config.ndim != 2:
        raise ValueError(f"config has {config.ndim} axes, expected 2")
    if (gx, gy) != config.specs:
        raise ValueError(f"grids {(gx, gy)} do not match config grids {config.specs}")


def _polyform_sum(coeffs, cx, sx, cy, sy, sub):
    return (
        np.einsum(sub, cx, coeffs.a, cy)
        + np.einsum(sub, cx, coeffs.b, sy)
        + np.einsum(sub, sx, coeffs.c, cy)
        + np.einsum(sub, sx, coeffs.d, sy)
    )


def eval_2d_polyform(coeffs: CoeffTable2D, config: TensorSplineConfig, x, y, method="closed"):
    """Bivariate spline from polynomial coefficients, at points ``(x, y)``."""
    _check_2d(config, coeffs.grid_x, coeffs.grid_y)
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    cx, sx = _padded_basis(config.axis_params(0), config.n_nodes[0], x, method)
    cy, sy = _padded_basis(config.axis_params(1), config.n_nodes[1], y, method)
    return _polyform_sum(coeffs, cx, sx, cy, sy, "...k,kl,...l->...")[()]


def polyform_lattice(coeffs: CoeffTable2D, config: TensorSplineConfig, xs, ys, method="closed"):
    """Polynomial-form spline on the lattice ``xs x ys``, shape ``(len(xs), len(ys))``."""
    _check_2d(config, coeffs.grid_x, coeffs.grid_y)
    cx, sx = _padded_basis(config.axis_params(0), config.n_nodes[0], np.asarray(xs, float), method)
    cy, sy = _padded_basis(config.axis_params(1), config.n_nodes[1], np.asarray(ys, float), method)
    return _polyform_sum(coeffs, cx, sx, cy, sy, "ik,kl,jl->ij")


def eval_2d_fundform(samples: SampleGrid, config: TensorSplineConfig, x, y, method="closed"):
    """Bivariate spline ``sum_kl f_kl ts_k(x) ts_l(y)`` at points ``(x, y)``."""
    if samples.ndim != 2:
        raise ValueError(f"expected a 2-axis sample grid, got {samples.ndim} axes")
    _check_2d(config, *samples.specs)
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    tx = fundamental_basis(config.axis_params(0), config.n_nodes[0], x, method)
    ty = fundamental_basis(config.axis_params(1), config.n_nodes[1], y, method)
    return np.einsum("...k,kl,...l->...", tx, samples.values, ty)[()]


def eval_nd_fundform(samples: SampleGrid, config: TensorSplineConfig, point, method="closed"):
    """d-variate spline at `point`, an array whose last axis has length d.

    Returns an array of shape ``point.shape[:-1]``.
    """
    config.check_samples(samples)
    point = np.asarray(point, dtype=float)
    d = config.ndim
    if point.shape[-1:] != (d,):
        raise ValueError(f"points must have a trailing axis of length {d}, got shape {point.shape}")
    flat = point.reshape(-1, d)
    out = samples.values[None, ...]
    for a in range(d):
        t = fundamental_basis(config.axis_params(a), config.n_nodes[a], flat[:, a], method)
        # contract the leading data axis against this axis' basis values
        out = np.einsum("pk,pk...->p...", t, np.broadcast_to(out, (flat.shape[0],) + out.shape[1:]))
    return out.reshape(point.shape[:-1])[()]


def fundform_lattice(samples: SampleGrid, config: TensorSplineConfig, axes, method="closed"):
    """Fundamental-form spline on the product lattice of the 1D arrays `axes`.

    Needs one basis evaluation per axis point rather than per lattice point.
    """
    config.check_samples(samples)
    if len(axes) != config.ndim:
        raise ValueError(f"got {len(axes)} lattice axes for a {config.ndim}-variable spline")
    out = samples.values
    for a, t in enumerate(axes):
        basis = fundamental_basis(config.axis_params(a), config.n_nodes[a], np.asarray(t, float), method)
        out = np.tensordot(out, basis, axes=([0], [1]))
    return out
