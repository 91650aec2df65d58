# Numerical oracles: grid diagonalization, transfer scattering, quadrature, ODE residuals
# Nothing here depends on the closed-form modules; spectra.py joins the two.

from .convergence import convergence_order, loglog_slope
from .grid import (
    Grid,
    GridHamiltonian,
    SpectrumReport,
    build_hamiltonian,
    eigen_lowest,
    grid_energies,
    richardson_spectrum,
)
from .quadrature import adaptive_quadrature, adaptive_quadrature_complex
from .residual import ode_residual, richardson_derivatives
from .transfer import scattering_transfer, transfer_amplitudes

__all__ = [
    "Grid",
    "GridHamiltonian",
    "SpectrumReport",
    "adaptive_quadrature",
    "adaptive_quadrature_complex",
    "build_hamiltonian",
    "convergence_order",
    "eigen_lowest",
    "grid_energies",
    "loglog_slope",
    "ode_residual",
    "richardson_derivatives",
    "richardson_spectrum",
    "scattering_transfer",
    "transfer_amplitudes",
]
