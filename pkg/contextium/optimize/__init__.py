"""Maximum-uncertainty optimization over KCBS contexts."""

from .schema import ExtremalReport, ExtremalStateRecord, OptimizationConfig, OptimizationResult
from .uncertainty import (
    AXIS_TOLERANCE,
    REFERENCE_AXES,
    TABLE_OPTIMA,
    OptimizationProblem,
    SurfaceSample,
    axis_of,
    certify,
    extremal_state_report,
    optimize_sum,
    smax_surface_sample,
    sum_uncertainty_products,
)

__all__ = [
    "AXIS_TOLERANCE",
    "ExtremalReport",
    "ExtremalStateRecord",
    "OptimizationConfig",
    "OptimizationProblem",
    "OptimizationResult",
    "REFERENCE_AXES",
    "SurfaceSample",
    "TABLE_OPTIMA",
    "axis_of",
    "certify",
    "extremal_state_report",
    "optimize_sum",
    "smax_surface_sample",
    "sum_uncertainty_products",
]
