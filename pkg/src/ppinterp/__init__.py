"""High-order data-bounded (DBI) and positivity-preserving (PPI) adaptive
polynomial interpolation on 1D/2D/3D structured meshes, with a monotone cubic
Hermite baseline and an experiment harness."""

from .bounds import (
    ExtremumClass,
    FlatDataError,
    IntervalBounds,
    boundary_sigmas,
    classify_interval,
    interval_bounds,
    scaling_factors,
)
from .config import DBI, PPI, InterpConfig
from .diagnostics import l2_error_continuum, l2_error_continuum_2d, l2_error_grid, refine_mesh
from .divdiff import (
    DividedDifferenceTable,
    IntervalInterpolant,
    as_mesh1d,
    build_table,
    estimate_local_error,
    newton_eval,
)
from .interp1d import adaptive_interpolation_1d, interpolate_1d, interval_interpolants
from .interpnd import adaptive_interpolation_2d, adaptive_interpolation_3d
from .pchip import pchip_1d, pchip_2d
from .stencil import (
    StencilState,
    b_bounds_step,
    build_stencil,
    geometry_factors,
    lambda_bar_candidate,
    replay_chain,
    select_direction,
)
from .testfunctions import TEST_FUNCTIONS, eval_test_function

__version__ = "0.1.0"

__all__ = [
    "DBI",
    "PPI",
    "InterpConfig",
    "ExtremumClass",
    "FlatDataError",
    "IntervalBounds",
    "boundary_sigmas",
    "classify_interval",
    "interval_bounds",
    "scaling_factors",
    "DividedDifferenceTable",
    "IntervalInterpolant",
    "as_mesh1d",
    "build_table",
    "newton_eval",
    "estimate_local_error",
    "StencilState",
    "geometry_factors",
    "lambda_bar_candidate",
    "b_bounds_step",
    "select_direction",
    "build_stencil",
    "replay_chain",
    "adaptive_interpolation_1d",
    "interpolate_1d",
    "interval_interpolants",
    "adaptive_interpolation_2d",
    "adaptive_interpolation_3d",
    "pchip_1d",
    "pchip_2d",
    "l2_error_continuum",
    "l2_error_continuum_2d",
    "l2_error_grid",
    "refine_mesh",
    "TEST_FUNCTIONS",
    "eval_test_function",
    "__version__",
]
