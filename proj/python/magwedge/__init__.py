"""Bound-state certificates for magnetic Laplacians on wedges.

Thin Python facade over the C++ core: special functions, the 1D fiber
threshold solver, and the variational existence certificates.
"""

from ._core import (
    band_value,
    build_ode_system,
    critical_aperture,
    delta_exists,
    erf,
    expansion_slope_check,
    f_inf,
    f_value,
    gaussian_moment,
    golden_min,
    j_of_a,
    large_beta_certificate,
    large_beta_witness,
    min_over_a,
    minimize_direct,
    minimize_spectral,
    n2_condition_lhs,
    n2_functional_value,
    quartic_min,
    robin_exists,
    small_beta_certificate,
    smallest_eig,
    threshold,
)

__all__ = [
    "band_value",
    "build_ode_system",
    "critical_aperture",
    "delta_exists",
    "erf",
    "expansion_slope_check",
    "f_inf",
    "f_value",
    "gaussian_moment",
    "golden_min",
    "j_of_a",
    "large_beta_certificate",
    "large_beta_witness",
    "min_over_a",
    "minimize_direct",
    "minimize_spectral",
    "n2_condition_lhs",
    "n2_functional_value",
    "quartic_min",
    "robin_exists",
    "small_beta_certificate",
    "smallest_eig",
    "threshold",
]
