"""
Scattering off the deformed delta barrier V delta(x).

A wave exp(i k+ x) comes in from the left; the reflected wave is
exp(-i k- x) with k-+ = (K +- lambda)/hbar and K = sqrt(2mE + lambda^2).
T = |S|^2 and Rc = |R|^2 are the squared amplitudes with unit incidence.
"""
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial
from typing import Any, Dict, List, Sequence, Tuple

from .analytic import ComplexAmplitude, gauge_phase
from .errors import ParameterError
from .logging_config import get_logger
from .params import PhysicalParams

logger = get_logger(__name__)


@dataclass
class ScatteringResult:
    """Amplitudes and derived quantities at one (E, lambda, V) point."""

    energy: float
    S: complex
    R: complex
    T: float
    Rc: float
    k_plus: float
    k_minus: float
    excess_exact: float
    excess_leading: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _check_energy(energy: float) -> None:
    if not energy > 0:
        raise ParameterError(f"Scattering energy must be positive, got {energy}")


def _momentum(energy: float, p: PhysicalParams) -> float:
    """K = sqrt(2mE + lambda^2)."""
    return math.sqrt(2.0 * p.mass * energy + p.lam ** 2)


def wavenumbers(energy: float, p: PhysicalParams) -> Tuple[float, float]:
    """(k_plus, k_minus) of the transmitted and reflected waves."""
    _check_energy(energy)
    big_k = _momentum(energy, p)
    return (big_k - p.lam) / p.hbar, (big_k + p.lam) / p.hbar


def amplitudes(energy: float, p: PhysicalParams) -> Tuple[complex, complex]:
    """S = hbar K / (hbar K + i m V), R = -i m V / (hbar K + i m V)."""
    _check_energy(energy)
    hk = p.hbar * _momentum(energy, p)
    denom = complex(hk, p.mass * p.strength)
    return hk / denom, complex(0.0, -p.mass * p.strength) / denom


def transmission(energy: float, p: PhysicalParams) -> float:
    """|S|^2 = hbar^2 (2mE + lambda^2) / (hbar^2 (2mE + lambda^2) + m^2 V^2)."""
    _check_energy(energy)
    hk2 = p.hbar ** 2 * (2.0 * p.mass * energy + p.lam ** 2)
    return hk2 / (hk2 + (p.mass * p.strength) ** 2)


def undeformed_transmission(energy: float, p: PhysicalParams) -> float:
    """|S_0|^2, the lambda = 0 transmission."""
    return transmission(energy, p.with_lambda(0.0))


def excess_tunneling_current(energy: float, p: PhysicalParams) -> Tuple[float, float]:
    """
    Relative change of |S|^2 caused by the deformation.

    Returns:
        (exact, leading): exact is (|S|^2 - |S_0|^2)/|S_0|^2 written without
        cancellation, leading is lambda^2 V^2 / (2E (2E hbar^2 + m V^2)).
    """
    _check_energy(energy)
    m, hbar, v, lam = p.mass, p.hbar, p.strength, p.lam
    exact = m * v ** 2 * lam ** 2 / (
        2.0 * energy * (hbar ** 2 * (2.0 * m * energy + lam ** 2) + (m * v) ** 2)
    )
    leading = lam ** 2 * v ** 2 / (2.0 * energy * (2.0 * energy * hbar ** 2 + m * v ** 2))
    return exact, leading


def barrier_amplitudes(energy: float, p: PhysicalParams) -> ScatteringResult:
    """
    Full scattering solution at energy E.

    Raises:
        ParameterError: E <= 0
    """
    s, r = amplitudes(energy, p)
    k_plus, k_minus = wavenumbers(energy, p)
    exact, leading = excess_tunneling_current(energy, p)
    return ScatteringResult(
        energy=energy,
        S=s,
        R=r,
        T=abs(s) ** 2,
        Rc=abs(r) ** 2,
        k_plus=k_plus,
        k_minus=k_minus,
        excess_exact=exact,
        excess_leading=leading,
    )


def barrier_wavefunction(x: float, energy: float, p: PhysicalParams) -> ComplexAmplitude:
    """exp(i k+ x) + R exp(-i k- x) for x < 0, S exp(i k+ x) for x >= 0."""
    s, r = amplitudes(energy, p)
    big_k = _momentum(energy, p) / p.hbar
    forward = complex(math.cos(big_k * x), math.sin(big_k * x))
    if x < 0:
        return gauge_phase(x, p) * (forward + r * forward.conjugate())
    return gauge_phase(x, p) * s * forward


def barrier_derivative(x: float, energy: float, p: PhysicalParams, side: int = 1) -> ComplexAmplitude:
    """Analytic psi'(x); at x = 0 ``side`` picks the one-sided limit."""
    if side not in (1, -1):
        raise ParameterError(f"side must be +1 or -1, got {side}")
    s, r = amplitudes(energy, p)
    k_plus, k_minus = wavenumbers(energy, p)
    left = x < 0 or (x == 0 and side < 0)
    if left:
        return 1j * k_plus * _plane(k_plus, x) - 1j * k_minus * r * _plane(-k_minus, x)
    return 1j * k_plus * s * _plane(k_plus, x)


def _plane(k: float, x: float) -> complex:
    return complex(math.cos(k * x), math.sin(k * x))


def barrier_step_residual(energy: float, p: PhysicalParams) -> float:
    """|psi'(0+) - psi'(0-) - (2mV/hbar^2) psi(0)|."""
    jump = barrier_derivative(0.0, energy, p, 1) - barrier_derivative(0.0, energy, p, -1)
    expected = 2.0 * p.mass * p.strength / p.hbar ** 2 * barrier_wavefunction(0.0, energy, p)
    return abs(jump - expected)


def transmission_sweep(
    energies: Sequence[float], p: PhysicalParams, workers: int = 1
) -> List[ScatteringResult]:
    """barrier_amplitudes over a list of energies, in input order."""
    job = partial(barrier_amplitudes, p=p)
    if workers <= 1 or len(energies) < 2:
        return [job(e) for e in energies]
    logger.info("Sweeping %d energies on %d workers", len(energies), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(job, energies))
