"""
Deformed-momentum 1D quantum systems

Closed-form spectra, wavefunctions, scattering amplitudes and Stark
splittings for H = p^2/2m + lambda p/m + V, each cross-checked against an
independent numerical oracle.
"""

__version__ = "0.1.0"

from .analytic import (
    BoundState,
    CoulombBranch,
    bound_state,
    coulomb_energy,
    coulomb_wavefunction,
    delta_well_energy,
    delta_well_wavefunction,
    linear_energy,
    linear_wavefunction,
)
from .errors import (
    AiryOverflowError,
    ConvergenceError,
    FormulaMismatchError,
    GupError,
    ParameterError,
    QuadratureError,
)
from .params import PhysicalParams, RunConfig
from .scattering import ScatteringResult, barrier_amplitudes, excess_tunneling_current, transmission
from .specfun import airy_ai, airy_bi, airy_zero, kummer_1f1, laguerre
from .stark import StarkReport, stark_matrix_element, stark_report

__all__ = [
    "AiryOverflowError",
    "BoundState",
    "ConvergenceError",
    "CoulombBranch",
    "FormulaMismatchError",
    "GupError",
    "ParameterError",
    "PhysicalParams",
    "QuadratureError",
    "RunConfig",
    "ScatteringResult",
    "StarkReport",
    "airy_ai",
    "airy_bi",
    "airy_zero",
    "barrier_amplitudes",
    "bound_state",
    "coulomb_energy",
    "coulomb_wavefunction",
    "delta_well_energy",
    "delta_well_wavefunction",
    "excess_tunneling_current",
    "kummer_1f1",
    "laguerre",
    "linear_energy",
    "linear_wavefunction",
    "stark_matrix_element",
    "stark_report",
    "transmission",
]
