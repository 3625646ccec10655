"""Alpha-spectral radius engine."""

from hyperturan.spectral.polynomial import eigen_residual, lagrangian_poly, poly_gradient
from hyperturan.spectral.solver import alpha_spectral_radius, maximize_on_sphere
from hyperturan.spectral.sweep import alpha_sweep, spectral_radius_bounds, vector_stats
from hyperturan.spectral.symmetric import symmetric_spectral_radius
from hyperturan.spectral.types import SpectralEstimate, VectorStats, WeightVector

__all__ = [
    "SpectralEstimate",
    "VectorStats",
    "WeightVector",
    "alpha_spectral_radius",
    "alpha_sweep",
    "eigen_residual",
    "lagrangian_poly",
    "maximize_on_sphere",
    "poly_gradient",
    "spectral_radius_bounds",
    "symmetric_spectral_radius",
    "vector_stats",
]
