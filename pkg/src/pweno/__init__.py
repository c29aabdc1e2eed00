"""WENO-2r midpoint interpolation with progressive accuracy near discontinuities."""

from .grid import (
    PointValues,
    UniformGrid,
    build_uniform_grid,
    midpoint,
    sample_point_values,
)
from .harness import (
    ORDER_FLOOR,
    CustomFunction,
    RefinementLevel,
    RefinementReport,
    TestFunctionSpec,
    estimated_order,
    locate_singular_interval,
    render_report,
    run_refinement,
    test_function,
    time_method,
)
from .interp import METHODS, MethodSpec, interpolate_all_midpoints, midpoint_value
from .lagrange import (
    Stencil,
    aitken_combine,
    full_stencil_value,
    neville_tableau,
    substencil_value,
)
from .smoothness import (
    INDICATOR_KINDS,
    IndicatorSet,
    UndividedDifferences,
    indicator_closed_form,
    indicator_quadrature,
    indicator_set,
    legacy_summed_indicator,
    paired_indicator,
    undivided_differences,
)
from .weights import (
    PAIRINGS,
    DyadicCoefficient,
    WeightTreeTrace,
    WeightVector,
    WenoParams,
    base_vectors,
    classical_optimal_weights,
    dyadic_coefficient,
    final_nonlinear_weights,
    pair_nonlinear_weights,
    progressive_optimal_weights,
)

__version__ = "0.1.0"

__all__ = [
    "ORDER_FLOOR",
    "INDICATOR_KINDS",
    "METHODS",
    "PAIRINGS",
    "CustomFunction",
    "DyadicCoefficient",
    "IndicatorSet",
    "MethodSpec",
    "PointValues",
    "RefinementLevel",
    "RefinementReport",
    "Stencil",
    "TestFunctionSpec",
    "UndividedDifferences",
    "UniformGrid",
    "WeightTreeTrace",
    "WeightVector",
    "WenoParams",
    "aitken_combine",
    "base_vectors",
    "build_uniform_grid",
    "classical_optimal_weights",
    "dyadic_coefficient",
    "estimated_order",
    "final_nonlinear_weights",
    "full_stencil_value",
    "indicator_closed_form",
    "indicator_quadrature",
    "indicator_set",
    "interpolate_all_midpoints",
    "legacy_summed_indicator",
    "locate_singular_interval",
    "midpoint",
    "midpoint_value",
    "neville_tableau",
    "pair_nonlinear_weights",
    "paired_indicator",
    "progressive_optimal_weights",
    "render_report",
    "run_refinement",
    "sample_point_values",
    "substencil_value",
    "test_function",
    "time_method",
    "undivided_differences",
    "__version__",
]
