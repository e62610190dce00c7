"""Fundamental (cardinal) trigonometric splines.

``ts_k`` equals 1 at interpolation node ``k`` and 0 at the other nodes::

    ts_k(x) = 1/N [1 + 2 sum_{j=1..n} c_j(x - x_k) / h_j]

    c_j(u) = v_j cos ju + sum_{m>=1} s^m [v_{mN-j} cos((mN-j)u) + v_{mN+j} cos((mN+j)u)]
    h_j    = v_j + sum_{m>=1} s^m [v_{mN-j} + v_{mN+j}],    s = (-1)^(I1 + I2)

Measuring ``u`` from a node of the grid ``I2`` turns the frequency
``mN +- j`` sign ``(-1)^(m I1)`` of the stitching grid into
``(-1)^(m (I1 + I2))``, which is why both series share that sign.

Any simple spline is the sample-weighted sum of these functions. Only
simple splines (``gamma = eta = (1, 1, 1)``) have fundamental splines here.
"""

from dataclasses import replace

import numpy as np

from .grids import GridSpec, nodes
from .splinekernel import (
    DegenerateFactorError,
    SplineParams,
    _class_sums_at_zero,
    _direct_class_sums,
    _tables,
    conv_factor,
)
from .trigpoly import SampleGrid

__all__ = ["fundamental_factors", "fundamental_basis", "fundamental_spline", "eval_spline_fund_1d"]


def _require_simple(params):
    if not params.is_simple:
        raise ValueError(
            "fundamental splines are defined for simple splines only "
            f"(gamma = eta = (1, 1, 1)), got gamma={params.gamma}, eta={params.eta}"
        )


def fundamental_factors(params: SplineParams, N: int, method: str = "closed") -> np.ndarray:
    """Normalizers ``h_j`` for j = 1..n."""
    _require_simple(params)
    GridSpec(N)
    n = (N - 1) // 2
    alternating = (params.stitch_indicator + params.interp_indicator) % 2 == 1
    h = np.empty(n)
    for j in range(1, n + 1):
        if method == "closed":
            hi, lo = _class_sums_at_zero(params.power, N, j, alternating)
        elif method == "direct":
            hi, lo = _direct_class_sums(params, N, j)
        else:
            raise ValueError(f"unknown method {method!r}; expected 'closed' or 'direct'")
        h[j - 1] = conv_factor(params.order, j) + lo + hi
    small = np.abs(h) < 10.0 * params.tail_tolerance
    if np.any(small):
        j = int(np.argmax(small)) + 1
        raise DegenerateFactorError(f"h_{j} = {h[j - 1]:.3e} is below 10*eps for N={N}, {params}")
    return h


def fundamental_basis(params: SplineParams, N: int, x, method: str = "closed") -> np.ndarray:
    """Values of all fundamental splines at `x`, shape ``x.shape + (N,)``.

    Column ``k - 1`` holds ``ts_k``, cardinal at the node ``x_k`` of the
    interpolation grid ``I2``.
    """
    _require_simple(params)
    h = fundamental_factors(params, N, method)
    xk = nodes(GridSpec(N, params.interp_indicator))
    shifted = np.asarray(x, dtype=float)[..., None] - xk
    relative = replace(params, stitch_indicator=(params.stitch_indicator + params.interp_indicator) % 2)
    c, _ = _tables(relative, N, shifted, method)
    return (1.0 + 2.0 * (c / h).sum(axis=-1)) / N


def fundamental_spline(params: SplineParams, k: int, N: int, x, method: str = "closed"):
    """Fundamental spline ``ts_k(x)`` for the 1-based node index `k`."""
    if not 1 <= k <= N:
        raise IndexError(f"node index k={k} out of range 1..{N}")
    return fundamental_basis(params, N, x, method)[..., k - 1][()]


def eval_spline_fund_1d(samples: SampleGrid, params: SplineParams, x, method: str = "closed"):
    """Spline ``sum_k f_k ts_k(x)`` through the 1D `samples`."""
    if samples.ndim != 1:
        raise ValueError(f"expected a 1-axis sample grid, got {samples.ndim} axes")
    spec = samples.specs[0]
    if spec.indicator != params.interp_indicator:
        raise ValueError(
            f"samples live on grid I={spec.indicator} but the spline interpolates on "
            f"I2={params.interp_indicator}"
        )
    return (fundamental_basis(params, spec.n_nodes, x, method) @ samples.values)[()]
