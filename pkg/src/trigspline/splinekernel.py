"""Spline cos-/sin-functions and univariate trigonometric splines.

For a harmonic ``k`` in ``1..n`` the spline cos-function is

    Cs_k(t) = c_k(t) / hc_k

    c_k(t) = g1 v_k cos kt + sum_{m>=1} (-1)^(m I1) [g3 v_{mN+k} cos((mN+k)t)
                                                  + g2 v_{mN-k} cos((mN-k)t)]
    hc_k   = g1 v_k + sum_{m>=1} (-1)^(m (I1 - I2)) [g3 v_{mN+k} + g2 v_{mN-k}]

with convergence factors ``v_j = j^-(1 + r)``; the sine analogue uses the
vector ``eta`` and a minus sign on the ``mN - k`` term. Replacing ``cos kx``
and ``sin kx`` in an interpolating polynomial by ``Cs_k`` and ``Ss_k`` gives
a spline of class C^(r-1) that still interpolates on the grid ``I2``.

Two evaluators are provided:

``method="closed"`` (default)
    Every ``m``-series is a residue class ``l = +-k (mod N)`` of the full
    series ``sum_l e^(i l t) / l^(1+r)``. The class is extracted with an
    N-point roots-of-unity filter, so each sum reduces to N polylogarithm
    values; the interpolation factors reduce to Hurwitz zeta values.
``method="direct"``
    Plain partial sums up to the depth chosen by :func:`truncation_depth`.
    Slow for small ``r`` and tight tolerances; intended as a reference.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import ceil

import numpy as np
from scipy.special import zeta

from ._polylog import unit_polylog
from .grids import GridSpec
from .trigpoly import CoeffTable1D, reduce_angle

__all__ = [
    "SplineParams",
    "DegenerateFactorError",
    "conv_factor",
    "truncation_depth",
    "c_series",
    "s_series",
    "hc_factor",
    "hs_factor",
    "Cs",
    "Ss",
    "basis_tables",
    "eval_spline_1d",
]

DEFAULT_EPS = 1e-10
# direct partial sums longer than this are refused
MAX_DIRECT_DEPTH = 50_000_000


class DegenerateFactorError(ArithmeticError):
    """An interpolation factor is too close to zero to divide by."""


def _vec3(v, name):
    v = tuple(float(x) for x in v)
    if len(v) != 3:
        raise ValueError(f"{name} must have exactly 3 components, got {len(v)}")
    if not all(np.isfinite(v)):
        raise ValueError(f"{name} must be finite, got {v}")
    return v


@dataclass(frozen=True)
class SplineParams:
    """Parameters of a univariate trigonometric spline.

    Parameters
    ----------
    stitch_indicator : int
        ``I1``, grid indicator of the stitching grid.
    interp_indicator : int
        ``I2``, grid indicator of the interpolation grid.
    order : int
        ``r >= 1``; the spline is of class C^(r-1).
    gamma, eta : tuple of 3 floats
        Parameter vectors of the cos- and sin-functions. The default
        ``(1, 1, 1)`` gives the simple spline. With ``gamma2 = gamma3 =
        eta2 = eta3 = 0`` no smoothing series remains and the spline is the
        interpolating polynomial itself.
    tail_tolerance : float
        Truncation tolerance ``eps`` for every infinite series.
    """

    stitch_indicator: int = 0
    interp_indicator: int = 0
    order: int = 1
    gamma: tuple = (1.0, 1.0, 1.0)
    eta: tuple = (1.0, 1.0, 1.0)
    tail_tolerance: float = DEFAULT_EPS

    def __post_init__(self):
        for name in ("stitch_indicator", "interp_indicator"):
            if getattr(self, name) not in (0, 1):
                raise ValueError(f"{name} must be 0 or 1, got {getattr(self, name)!r}")
        if int(self.order) != self.order or self.order < 1:
            raise ValueError(f"order r must be an integer >= 1, got {self.order!r}")
        if not (self.tail_tolerance > 0 and np.isfinite(self.tail_tolerance)):
            raise ValueError(f"tail_tolerance must be positive, got {self.tail_tolerance!r}")
        gamma = _vec3(self.gamma, "gamma")
        eta = _vec3(self.eta, "eta")
        object.__setattr__(self, "order", int(self.order))
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "eta", eta)

    @property
    def is_simple(self) -> bool:
        return self.gamma == (1.0, 1.0, 1.0) and self.eta == (1.0, 1.0, 1.0)

    @property
    def power(self) -> int:
        """Exponent ``1 + r`` of the convergence factors."""
        return self.order + 1


def conv_factor(r, k):
    """Convergence factor ``k^-(1 + r)``; `k` may be an array of positive ints."""
    k = np.asarray(k)
    if np.any(k < 1):
        raise ValueError(f"convergence factors are defined for k >= 1, got {k}")
    if r < 1:
        raise ValueError(f"order r must be >= 1, got {r}")
    return (k.astype(float) ** -(1.0 + r))[()]


def truncation_depth(params: SplineParams, N: int) -> int:
    """Number of ``m`` terms M after which the series tail is below ``eps``.

    Uses the integral-test bound ``2 gmax (MN - n)^-r / (r N) < eps``.
    """
    n = (N - 1) // 2
    r, eps = params.order, params.tail_tolerance
    gmax = max(abs(g) for g in params.gamma + params.eta)
    if gmax == 0.0:
        return 1
    # (MN - n)^r > 2 gmax / (r N eps)
    bound = (2.0 * gmax / (r * N * eps)) ** (1.0 / r)
    M = max(1, ceil((bound + n) / N))
    while 2.0 * gmax * (M * N - n) ** (-r) / (r * N) >= eps:
        M += 1
    return M


def _check_harmonic(k, N):
    n = (N - 1) // 2
    if not 1 <= k <= n:
        raise IndexError(f"harmonic k={k} out of range 1..{n} (N={N})")


def _check_N(N):
    GridSpec(N)  # validates odd N >= 3
    return int(N)


# -- series tables --------------------------------------------------------


def _closed_tables(params, N, t):
    """``c_k(t)`` and ``s_k(t)`` for k = 1..n via the roots-of-unity filter."""
    n = (N - 1) // 2
    p = params.power
    g1, g2, g3 = params.gamma
    e1, e2, e3 = params.eta
    k = np.arange(1, n + 1)
    phi = (2.0 * np.pi * np.arange(N) + np.pi * params.stitch_indicator) / N
    tol = max(params.tail_tolerance * 1e-6, 1e-18)
    L = unit_polylog(p, t[..., None] + phi, tol)
    E = np.exp(-1j * np.outer(phi, k)) / N
    # P: l = mN + k, m >= 0 ; Q: l = mN - k, m >= 1 ; both signed by (-1)^(m I1)
    P = L @ E
    Q = L @ E.conj()
    base = conv_factor(params.order, k) * np.exp(1j * t[..., None] * k)
    upper = P - base
    c = g1 * base.real + g3 * upper.real + g2 * Q.real
    s = e1 * base.imag + e3 * upper.imag - e2 * Q.imag
    return c, s


def _direct_tables(params, N, t):
    n = (N - 1) // 2
    r = params.order
    g1, g2, g3 = params.gamma
    e1, e2, e3 = params.eta
    M = truncation_depth(params, N)
    if M > MAX_DIRECT_DEPTH:
        raise ValueError(
            f"direct summation needs M={M} terms for r={r}, eps={params.tail_tolerance}; "
            "use method='closed'"
        )
    k = np.arange(1, n + 1)
    tk = t[..., None] * k
    nu = conv_factor(r, k)
    c = g1 * nu * np.cos(tk)
    s = e1 * nu * np.sin(tk)
    chunk = max(1, 2_000_000 // max(1, t.size * n))
    for m0 in range(1, M + 1, chunk):
        m = np.arange(m0, min(M, m0 + chunk - 1) + 1)
        sign = (-1.0) ** (m * params.stitch_indicator)
        hi = m[:, None] * N + k  # (chunk, n)
        lo = m[:, None] * N - k
        whi = sign[:, None] * hi.astype(float) ** -(1.0 + r)
        wlo = sign[:, None] * lo.astype(float) ** -(1.0 + r)
        ahi = t[..., None, None] * hi
        alo = t[..., None, None] * lo
        c = c + (g3 * whi * np.cos(ahi) + g2 * wlo * np.cos(alo)).sum(axis=-2)
        s = s + (e3 * whi * np.sin(ahi) - e2 * wlo * np.sin(alo)).sum(axis=-2)
    return c, s


def _tables(params, N, t, method):
    t = reduce_angle(t)
    if method == "closed":
        return _closed_tables(params, N, t)
    if method == "direct":
        return _direct_tables(params, N, t)
    raise ValueError(f"unknown method {method!r}; expected 'closed' or 'direct'")


def c_series(params: SplineParams, k: int, N: int, t, method: str = "closed"):
    """Numerator series ``c_k(t)`` of the spline cos-function."""
    N = _check_N(N)
    _check_harmonic(k, N)
    return _tables(params, N, t, method)[0][..., k - 1][()]


def s_series(params: SplineParams, k: int, N: int, t, method: str = "closed"):
    """Numerator series ``s_k(t)`` of the spline sin-function."""
    N = _check_N(N)
    _check_harmonic(k, N)
    return _tables(params, N, t, method)[1][..., k - 1][()]


# -- interpolation factors ------------------------------------------------


def _class_sums_at_zero(p, N, k, alternating):
    """``sum_{m>=1} s^m (mN+k)^-p`` and ``sum_{m>=1} s^m (mN-k)^-p``, ``s = +-1``."""
    if not alternating:
        return N**-p * zeta(p, 1.0 + k / N), N**-p * zeta(p, 1.0 - k / N)
    w = (2.0 * N) ** -p
    hi = w * (zeta(p, 1.0 + k / (2.0 * N)) - zeta(p, (N + k) / (2.0 * N)))
    lo = w * (zeta(p, 1.0 - k / (2.0 * N)) - zeta(p, (N - k) / (2.0 * N)))
    return hi, lo


def _direct_class_sums(params, N, k):
    M = truncation_depth(params, N)
    if M > MAX_DIRECT_DEPTH:
        raise ValueError(f"direct summation needs M={M} terms; use method='closed'")
    m = np.arange(1, M + 1)
    sign = (-1.0) ** (m * (params.stitch_indicator - params.interp_indicator))
    p = params.power
    hi = np.sum(sign * (m * N + k).astype(float) ** -p)
    lo = np.sum(sign * (m * N - k).astype(float) ** -p)
    return hi, lo


@lru_cache(maxsize=4096)
def _factors(params, k, N, method):
    if method == "closed":
        alternating = params.stitch_indicator != params.interp_indicator
        hi, lo = _class_sums_at_zero(params.power, N, k, alternating)
    elif method == "direct":
        hi, lo = _direct_class_sums(params, N, k)
    else:
        raise ValueError(f"unknown method {method!r}; expected 'closed' or 'direct'")
    nu = float(conv_factor(params.order, k))
    g1, g2, g3 = params.gamma
    e1, e2, e3 = params.eta
    hc = g1 * nu + g3 * hi + g2 * lo
    hs = e1 * nu + e3 * hi + e2 * lo
    return float(hc), float(hs)


def _guarded(value, kind, params, k, N):
    if abs(value) < 10.0 * params.tail_tolerance:
        raise DegenerateFactorError(
            f"interpolation factor {kind}_{k} = {value:.3e} is below 10*eps for N={N}, {params}"
        )
    return value


def hc_factor(params: SplineParams, k: int, N: int, method: str = "closed") -> float:
    """Interpolation factor ``hc_k`` of the spline cos-function."""
    N = _check_N(N)
    _check_harmonic(k, N)
    return _guarded(_factors(params, k, N, method)[0], "hc", params, k, N)


def hs_factor(params: SplineParams, k: int, N: int, method: str = "closed") -> float:
    """Interpolation factor ``hs_k`` of the spline sin-function."""
    N = _check_N(N)
    _check_harmonic(k, N)
    return _guarded(_factors(params, k, N, method)[1], "hs", params, k, N)


def _factor_vectors(params, N, method):
    n = (N - 1) // 2
    hc = np.array([hc_factor(params, k, N, method) for k in range(1, n + 1)])
    hs = np.array([hs_factor(params, k, N, method) for k in range(1, n + 1)])
    return hc, hs


def basis_tables(params: SplineParams, N: int, t, method: str = "closed"):
    """All spline cos- and sin-functions at `t`.

    Returns
    -------
    cs, ss : ndarray, shape ``t.shape + (n,)``
        ``cs[..., k - 1] = Cs_k(t)`` and ``ss[..., k - 1] = Ss_k(t)``.
    """
    N = _check_N(N)
    hc, hs = _factor_vectors(params, N, method)
    c, s = _tables(params, N, t, method)
    return c / hc, s / hs


def Cs(params: SplineParams, k: int, N: int, t, method: str = "closed"):
    """Spline cos-function ``c_k(t) / hc_k``."""
    N = _check_N(N)
    _check_harmonic(k, N)
    return (c_series(params, k, N, t, method) / hc_factor(params, k, N, method))[()]


def Ss(params: SplineParams, k: int, N: int, t, method: str = "closed"):
    """Spline sin-function ``s_k(t) / hs_k``."""
    N = _check_N(N)
    _check_harmonic(k, N)
    return (s_series(params, k, N, t, method) / hs_factor(params, k, N, method))[()]


def eval_spline_1d(coeffs: CoeffTable1D, params: SplineParams, t, method: str = "closed"):
    """Trigonometric spline ``a0/2 + sum_k (a_k Cs_k(t) + b_k Ss_k(t))``.

    The coefficients must come from samples on the interpolation grid of
    `params`.
    """
    grid = coeffs.grid
    if grid.indicator != params.interp_indicator:
        raise ValueError(
            f"coefficients were computed on grid I={grid.indicator} but the spline "
            f"interpolates on I2={params.interp_indicator}"
        )
    cs, ss = basis_tables(params, grid.n_nodes, t, method)
    out = 0.5 * coeffs.a[0] + cs @ coeffs.a[1:] + ss @ coeffs.b
    return out[()]
