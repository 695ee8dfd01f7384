"""Visibility and correlation measures of entangled Gaussian double-slit states."""

from ._entvis import (
    ConfigError,
    ParameterError,
    QuadratureError,
    SetupParams,
    UnsupportedBasisError,
    corrected_report,
    correlation_report,
    density,
    density_grid,
    epsilon_and_bound,
    marginal,
    normalization_b2,
    normalized_R,
    normalized_S,
    pi,
    psi,
    rho_k,
    rho_x,
    single_particle_V,
    sweep,
    total_mass,
    two_particle_D,
    two_particle_W,
    validate,
    visibility,
    visibility_report,
)

__all__ = [
    "ConfigError",
    "ParameterError",
    "QuadratureError",
    "SetupParams",
    "UnsupportedBasisError",
    "corrected_report",
    "correlation_report",
    "density",
    "density_grid",
    "epsilon_and_bound",
    "marginal",
    "normalization_b2",
    "normalized_R",
    "normalized_S",
    "pi",
    "psi",
    "rho_k",
    "rho_x",
    "single_particle_V",
    "sweep",
    "total_mass",
    "two_particle_D",
    "two_particle_W",
    "validate",
    "visibility",
    "visibility_report",
]
