"""Periodic trigonometric interpolation splines on uniform grids."""

from .fundamental import eval_spline_fund_1d, fundamental_basis, fundamental_spline
from .grids import GridSpec, node, nodes
from .splinekernel import (
    Cs,
    DegenerateFactorError,
    SplineParams,
    Ss,
    basis_tables,
    c_series,
    conv_factor,
    eval_spline_1d,
    hc_factor,
    hs_factor,
    s_series,
    truncation_depth,
)
from .tensor import (
    TensorSplineConfig,
    eval_2d_fundform,
    eval_2d_polyform,
    eval_nd_fundform,
    fundform_lattice,
    polyform_lattice,
)
from .trigpoly import (
    CoeffTable1D,
    CoeffTable2D,
    SampleGrid,
    coeffs_1d,
    coeffs_2d,
    eval_poly_1d,
    eval_poly_2d,
)

__version__ = "0.1.0"
