"""Decomposition of univariate polynomials and the geometry around it.

The package computes compositions f = g(h) and their inverses (Newton
iteration on the reversed series for h, generalized Taylor expansion for g),
constructs polynomials that decompose at two divisors at once, and measures
coordinate-direction epsilon-tubes around the decomposable variety: exact
closed-form density brackets plus reproducible Monte Carlo estimators.
"""

from .collisions import (
    CollisionParameterError,
    CollisionParams,
    alpha_exp,
    alpha_trig,
    dickson,
    original_shift,
    verify_bidecomposable,
)
from .decompose import (
    Decomposition,
    DivisorError,
    DivisorPlan,
    NtSet,
    degree_bound,
    dimension,
    divisor_plan,
    is_composite,
    is_decomposable,
    least_prime_factor,
    nt_coordinates,
    nt_set,
    proper_divisors,
    right_component,
    section,
    section_components,
    try_decompose,
)
from .density import (
    DensityBounds,
    EstimateResult,
    TubeSpec,
    bounds_complex,
    bounds_complex_union,
    bounds_real,
    bounds_real_union,
    cheng_bound,
    density_report,
    disk_overlap_area,
    estimate_density,
    estimate_subspace_density,
    tube_membership,
)
from .polynomial import (
    NonInvertibleSeriesError,
    Polynomial,
    SeriesNormalizationError,
    compose,
    format_polynomial,
    format_scalar,
    is_monic_original,
    parse_polynomial,
    parse_scalar,
    poly_allclose,
    require_monic_original,
    reverse,
    series_dth_root,
    series_inverse,
    taylor_coefficients,
    truncate,
    x_power,
)

__all__ = [
    "CollisionParameterError",
    "CollisionParams",
    "Decomposition",
    "DensityBounds",
    "DivisorError",
    "DivisorPlan",
    "EstimateResult",
    "NonInvertibleSeriesError",
    "NtSet",
    "Polynomial",
    "SeriesNormalizationError",
    "TubeSpec",
    "alpha_exp",
    "alpha_trig",
    "bounds_complex",
    "bounds_complex_union",
    "bounds_real",
    "bounds_real_union",
    "cheng_bound",
    "compose",
    "degree_bound",
    "density_report",
    "dickson",
    "dimension",
    "disk_overlap_area",
    "divisor_plan",
    "estimate_density",
    "estimate_subspace_density",
    "format_polynomial",
    "format_scalar",
    "is_composite",
    "is_decomposable",
    "is_monic_original",
    "least_prime_factor",
    "nt_coordinates",
    "nt_set",
    "original_shift",
    "parse_polynomial",
    "parse_scalar",
    "poly_allclose",
    "proper_divisors",
    "require_monic_original",
    "reverse",
    "right_component",
    "section",
    "section_components",
    "series_dth_root",
    "series_inverse",
    "taylor_coefficients",
    "truncate",
    "try_decompose",
    "tube_membership",
    "verify_bidecomposable",
    "x_power",
]

__version__ = "0.1.0"
