"""Interpolating trigonometric polynomials in one and two variables.

Coefficients are computed by direct O(N^2) summation over the nodes; the
FFT route in :func:`coeffs_1d` is an optimization checked against it.
"""

from dataclasses import dataclass

import numpy as np

from .grids import GridSpec, nodes

__all__ = [
    "SampleGrid",
    "CoeffTable1D",
    "CoeffTable2D",
    "coeffs_1d",
    "coeffs_2d",
    "eval_poly_1d",
    "eval_poly_2d",
    "reduce_angle",
]

TWO_PI = 2.0 * np.pi


def reduce_angle(x):
    """Map angles into [0, 2pi)."""
    x = np.mod(np.asarray(x, dtype=float), TWO_PI)
    # np.mod can return exactly 2pi for tiny negative inputs
    return np.where(x >= TWO_PI, 0.0, x)


@dataclass(frozen=True, eq=False)
class SampleGrid:
    """Function samples on a Cartesian product of uniform grids.

    ``values[j1 - 1, ..., jd - 1]`` holds ``f(x_j1, ..., x_jd)``.
    """

    values: np.ndarray
    specs: tuple

    def __post_init__(self):
        specs = tuple(self.specs)
        values = np.array(self.values, dtype=float)
        if values.ndim == 0 and len(specs) == 0:
            raise ValueError("a sample grid needs at least one axis")
        for spec in specs:
            if not isinstance(spec, GridSpec):
                raise TypeError(f"expected GridSpec, got {type(spec).__name__}")
        expected = tuple(s.n_nodes for s in specs)
        if values.shape != expected:
            raise ValueError(f"sample shape {values.shape} does not match grid node counts {expected}")
        bad = np.argwhere(~np.isfinite(values))
        if bad.size:
            idx = tuple(int(i) + 1 for i in bad[0])
            raise ValueError(f"non-finite sample at node {idx}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "specs", specs)

    @property
    def ndim(self) -> int:
        return len(self.specs)

    @property
    def shape(self) -> tuple:
        return self.values.shape

    @classmethod
    def from_function(cls, func, specs):
        """Sample ``func(x1, ..., xd)`` (vectorized) on the product grid."""
        specs = tuple(specs)
        axes = np.meshgrid(*[nodes(s) for s in specs], indexing="ij")
        return cls(np.broadcast_to(func(*axes), axes[0].shape), specs)


@dataclass(frozen=True, eq=False)
class CoeffTable1D:
    """Cosine coefficients ``a[0..n]`` and sine coefficients ``b[1..n]``.

    ``b`` is stored with length ``n``; ``b[k - 1]`` multiplies ``sin kx``.
    """

    a: np.ndarray
    b: np.ndarray
    grid: GridSpec

    def __post_init__(self):
        n = self.grid.half
        a = np.array(self.a, dtype=float)
        b = np.array(self.b, dtype=float)
        if a.shape != (n + 1,) or b.shape != (n,):
            raise ValueError(f"expected a of length {n + 1} and b of length {n}, got {a.shape}, {b.shape}")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise ValueError("coefficients must be finite")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True, eq=False)
class CoeffTable2D:
    """Coefficient matrices of the bivariate polynomial, each ``(n1 + 1, n2 + 1)``.

    ``a``, ``b``, ``c``, ``d`` multiply ``cos kx cos ly``, ``cos kx sin ly``,
    ``sin kx cos ly`` and ``sin kx sin ly`` respectively.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray
    grid_x: GridSpec
    grid_y: GridSpec

    def __post_init__(self):
        shape = (self.grid_x.half + 1, self.grid_y.half + 1)
        for name in "abcd":
            m = np.array(getattr(self, name), dtype=float)
            if m.shape != shape:
                raise ValueError(f"coefficient matrix {name} has shape {m.shape}, expected {shape}")
            if not np.all(np.isfinite(m)):
                raise ValueError(f"coefficient matrix {name} has non-finite entries")
            m.setflags(write=False)
            object.__setattr__(self, name, m)


def _samples_1d(samples):
    if isinstance(samples, SampleGrid):
        if samples.ndim != 1:
            raise ValueError(f"expected a 1-axis sample grid, got {samples.ndim} axes")
        return samples.values, samples.specs[0]
    raise TypeError("samples must be a SampleGrid")


def coeffs_1d(samples: SampleGrid, method: str = "direct") -> CoeffTable1D:
    """Coefficients of the interpolating polynomial of 1D `samples`.

    ``a_k = 2/N sum_j f_j cos(k x_j)`` and ``b_k = 2/N sum_j f_j sin(k x_j)``.
    `method` is ``"direct"`` (reference summation) or ``"fft"``.
    """
    f, spec = _samples_1d(samples)
    N, n = spec.n_nodes, spec.half
    k = np.arange(n + 1)
    if method == "direct":
        kx = np.outer(k, nodes(spec))
        a = (2.0 / N) * (np.cos(kx) @ f)
        b = (2.0 / N) * (np.sin(kx[1:]) @ f)
    elif method == "fft":
        # sum_j f_j exp(-i k x_j) = exp(-i k x_1) * rfft(f)[k]
        z = np.fft.rfft(f)[: n + 1] * np.exp(-1j * k * nodes(spec)[0])
        a = (2.0 / N) * z.real
        b = (-2.0 / N) * z.imag[1:]
    else:
        raise ValueError(f"unknown method {method!r}; expected 'direct' or 'fft'")
    return CoeffTable1D(a, b, spec)


def _harmonics(x, n):
    """``cos(kx)`` and ``sin(kx)`` for k = 0..n, stacked on a trailing axis."""
    kx = reduce_angle(x)[..., None] * np.arange(n + 1)
    return np.cos(kx), np.sin(kx)


def eval_poly_1d(coeffs: CoeffTable1D, x):
    """Evaluate ``a0/2 + sum_k (a_k cos kx + b_k sin kx)``; vectorized over `x`."""
    cx, sx = _harmonics(x, coeffs.grid.half)
    out = 0.5 * coeffs.a[0] + cx[..., 1:] @ coeffs.a[1:] + sx[..., 1:] @ coeffs.b
    return out[()]


def _norm_weights(N):
    w = np.full((N - 1) // 2 + 1, 2.0 / N)
    w[0] = 1.0 / N
    return w


def coeffs_2d(samples: SampleGrid) -> CoeffTable2D:
    """Coefficients of the bivariate interpolating polynomial.

    The normalization reproduces the four cases of the constants K1..K4:
    ``1/(N1 N2)`` at k = l = 0, ``2/(N1 N2)`` when exactly one index is
    zero and ``4/(N1 N2)`` otherwise. Terms whose sine factor has zero
    frequency are set to exactly zero.
    """
    if not isinstance(samples, SampleGrid):
        raise TypeError("samples must be a SampleGrid")
    if samples.ndim != 2:
        raise ValueError(f"expected a 2-axis sample grid, got {samples.ndim} axes")
    gx, gy = samples.specs
    if gx.indicator != gy.indicator:
        raise ValueError(
            f"grid indicators must agree across axes, got I_x={gx.indicator} and I_y={gy.indicator}"
        )
    F = samples.values
    cx, sx = _harmonics(nodes(gx), gx.half)
    cy, sy = _harmonics(nodes(gy), gy.half)
    w = np.outer(_norm_weights(gx.n_nodes), _norm_weights(gy.n_nodes))
    a = w * (cx.T @ F @ cy)
    b = w * (cx.T @ F @ sy)
    c = w * (sx.T @ F @ cy)
    d = w * (sx.T @ F @ sy)
    b[:, 0] = 0.0
    c[0, :] = 0.0
    d[0, :] = 0.0
    d[:, 0] = 0.0
    return CoeffTable2D(a, b, c, d, gx, gy)


def eval_poly_2d(coeffs: CoeffTable2D, x, y):
    """Evaluate the bivariate polynomial at points ``(x, y)`` (broadcast)."""
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    cx, sx = _harmonics(x, coeffs.grid_x.half)
    cy, sy = _harmonics(y, coeffs.grid_y.half)
    out = (
        np.einsum("...k,kl,...l->...", cx, coeffs.a, cy)
        + np.einsum("...k,kl,...l->...", cx, coeffs.b, sy)
        + np.einsum("...k,kl,...l->...", sx, coeffs.c, cy)
        + np.einsum("...k,kl,...l->...", sx, coeffs.d, sy)
    )
    return out[()]
