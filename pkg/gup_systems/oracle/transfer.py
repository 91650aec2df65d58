"""
Scattering by direct integration of the deformed stationary equation.

The delta barrier is replaced by a narrow Gaussian of the same area. A
purely transmitted wave is started on the right and integrated leftwards;
on the left it is split into incident and reflected plane waves.
"""
import cmath
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.integrate import solve_ivp

from ..errors import ConvergenceError, ParameterError
from ..logging_config import get_logger
from ..params import PhysicalParams
from .potentials import gaussian_delta

logger = get_logger(__name__)

DEFAULT_REG_WIDTH = 1e-3
SPAN_WIDTHS = 12.0
RTOL = 1e-12
ATOL = 1e-14


@dataclass
class TransferResult:
    energy: float
    reg_width: float
    S: complex
    R: complex

    @property
    def T(self) -> float:
        return abs(self.S) ** 2

    @property
    def Rc(self) -> float:
        return abs(self.R) ** 2


def free_wavenumbers(energy: float, p: PhysicalParams) -> Tuple[float, float]:
    """Roots of hbar^2 k^2 / 2m + lambda hbar k / m = E as (k_right, k_left_magnitude)."""
    root = math.sqrt(p.lam ** 2 + 2.0 * p.mass * energy)
    return (root - p.lam) / p.hbar, (root + p.lam) / p.hbar


def transfer_amplitudes(energy: float, p: PhysicalParams, reg_width: float = DEFAULT_REG_WIDTH) -> TransferResult:
    """
    S and R for the Gaussian-regularized barrier.

    Raises:
        ParameterError: E <= 0 or reg_width <= 0
        ConvergenceError: the integrator failed
    """
    if not energy > 0:
        raise ParameterError(f"Scattering energy must be positive, got {energy}")
    if not reg_width > 0:
        raise ParameterError(f"Regularization width must be positive, got {reg_width}")

    barrier = gaussian_delta(p.strength, reg_width)
    k_right, k_left = free_wavenumbers(energy, p)
    drift = 2j * p.lam / p.hbar
    well = 2.0 * p.mass / p.hbar ** 2

    def rhs(x: float, y: np.ndarray) -> np.ndarray:
        psi, dpsi = y
        return np.array([dpsi, -drift * dpsi - well * (energy - barrier(x)) * psi])

    edge = SPAN_WIDTHS * reg_width
    start = cmath.exp(1j * k_right * edge)
    y0 = np.array([start, 1j * k_right * start], dtype=complex)
    solution = solve_ivp(
        rhs, (edge, -edge), y0, method="DOP853", rtol=RTOL, atol=ATOL, max_step=reg_width / 2.0
    )
    if not solution.success:
        raise ConvergenceError(f"Transfer integration failed at E={energy}: {solution.message}")

    psi, dpsi = solution.y[:, -1]
    x = -edge
    # psi = A e^{i k_right x} + B e^{-i k_left x}
    total = 1j * (k_right + k_left)
    incident = (1j * k_left * psi + dpsi) / (total * cmath.exp(1j * k_right * x))
    reflected = (1j * k_right * psi - dpsi) / (total * cmath.exp(-1j * k_left * x))
    logger.debug("transfer E=%g w=%g: %d rhs evaluations", energy, reg_width, solution.nfev)
    return TransferResult(energy=energy, reg_width=reg_width, S=1.0 / incident, R=reflected / incident)


def scattering_transfer(
    energy: float, p: PhysicalParams, reg_width: float = DEFAULT_REG_WIDTH
) -> Tuple[float, float]:
    """(T, Rc) from the transfer integration."""
    result = transfer_amplitudes(energy, p, reg_width)
    return result.T, result.Rc
