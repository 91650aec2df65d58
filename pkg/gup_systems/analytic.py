"""
Closed-form bound states of the deformed Hamiltonian H = p^2/2m + lambda p/m + V.

Every level carries the uniform shift -lambda^2/2m and every wavefunction
the phase exp(-i lambda x / hbar) relative to the undeformed solution.
"""
import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Optional

from .errors import ParameterError
from .logging_config import get_logger
from .oracle.quadrature import adaptive_quadrature
from .params import PhysicalParams
from .specfun import airy_ai, airy_ai_prime, airy_zero, kummer_1f1

logger = get_logger(__name__)

ComplexAmplitude = complex


class CoulombBranch(str, Enum):
    """Degenerate partner: A has modulus f(|x|) on both sides, B flips sign on x < 0."""

    A = "A"
    B = "B"


@dataclass
class BoundState:
    """A bound level with its wavefunction."""

    kind: str
    index: int
    energy: float
    wavefunction: Callable[[float], complex]

    def __call__(self, x: float) -> complex:
        return self.wavefunction(x)


def gauge_phase(x: float, p: PhysicalParams) -> complex:
    """exp(-i lambda x / hbar), the factor relating deformed and undeformed states."""
    return cmath.exp(-1j * p.lam * x / p.hbar)


def _check_level(n: int) -> None:
    if n < 1:
        raise ParameterError(f"Level index must be >= 1, got {n}")


# --- linear potential -------------------------------------------------------

def linear_length_scale(p: PhysicalParams) -> float:
    """(2mF/hbar^2)^(1/3), the inverse Airy length."""
    return (2.0 * p.mass * p.slope / p.hbar ** 2) ** (1.0 / 3.0)


def linear_energy(n: int, p: PhysicalParams) -> float:
    """E_n = -(F^2 hbar^2 / 2m)^(1/3) a_n - lambda^2 / 2m."""
    _check_level(n)
    scale = (p.slope ** 2 * p.hbar ** 2 / (2.0 * p.mass)) ** (1.0 / 3.0)
    return -scale * airy_zero(n) + p.gauge_shift


def linear_wavefunction(n: int, x: float, p: PhysicalParams) -> ComplexAmplitude:
    """
    Normalized eigenfunction above the wall at x = 0.

    Returns 0 on x < 0.
    """
    _check_level(n)
    if x < 0:
        return 0j
    s = linear_length_scale(p)
    a_n = airy_zero(n)
    norm = math.sqrt(s) / abs(airy_ai_prime(a_n))
    return norm * gauge_phase(x, p) * airy_ai(a_n + s * x)


def linear_quantization_residual(energy: float, p: PhysicalParams) -> float:
    """Ai evaluated where the wall condition places it; zero on the spectrum."""
    shifted = energy - p.gauge_shift
    factor = (2.0 * p.mass / (p.slope ** 2 * p.hbar ** 2)) ** (1.0 / 3.0)
    return airy_ai(-factor * shifted)


# --- delta well -------------------------------------------------------------

def delta_well_energy(p: PhysicalParams) -> float:
    """E = -m V^2 / 2 hbar^2 - lambda^2 / 2m."""
    return -p.mass * p.strength ** 2 / (2.0 * p.hbar ** 2) + p.gauge_shift


def _delta_decay(p: PhysicalParams) -> float:
    return p.mass * p.strength / p.hbar ** 2


def delta_well_wavefunction(x: float, p: PhysicalParams) -> ComplexAmplitude:
    q = _delta_decay(p)
    amplitude = math.sqrt(p.mass * p.strength) / p.hbar
    return amplitude * math.exp(-q * abs(x)) * gauge_phase(x, p)


def delta_well_derivative(x: float, p: PhysicalParams, side: int = 1) -> ComplexAmplitude:
    """
    Analytic psi'(x); at x = 0 ``side`` (+1 or -1) picks the one-sided limit.
    """
    if side not in (1, -1):
        raise ParameterError(f"side must be +1 or -1, got {side}")
    q = _delta_decay(p)
    sign = side if x == 0 else math.copysign(1.0, x)
    return delta_well_wavefunction(x, p) * (-q * sign - 1j * p.lam / p.hbar)


def delta_well_step_residual(p: PhysicalParams) -> float:
    """|psi'(0+) - psi'(0-) + (2mV/hbar^2) psi(0)|."""
    jump = delta_well_derivative(0.0, p, 1) - delta_well_derivative(0.0, p, -1)
    expected = -2.0 * p.mass * p.strength / p.hbar ** 2 * delta_well_wavefunction(0.0, p)
    return abs(jump - expected)


# --- Coulomb ----------------------------------------------------------------

def coulomb_energy(n: int, p: PhysicalParams) -> float:
    """E_n = -kappa^2 m / (2 hbar^2 n^2) - lambda^2 / 2m."""
    _check_level(n)
    return -p.kappa ** 2 * p.mass / (2.0 * p.hbar ** 2 * n * n) + p.gauge_shift


def coulomb_decay_rate(n: int, p: PhysicalParams) -> float:
    """kappa m / (n hbar^2)."""
    return p.kappa * p.mass / (n * p.hbar ** 2)


def _coulomb_radial(n: int, u: float, p: PhysicalParams) -> float:
    c = coulomb_decay_rate(n, p)
    return u * math.exp(-c * u) * kummer_1f1(1 - n, 2, 2.0 * c * u)


def coulomb_norm(n: int, p: PhysicalParams) -> float:
    """Full-line integral of |psi|^2 for the unnormalized states: n^3 hbar^6 / (2 kappa^3 m^3)."""
    _check_level(n)
    return n ** 3 * p.hbar ** 6 / (2.0 * p.kappa ** 3 * p.mass ** 3)


@lru_cache(maxsize=256)
def _norm_by_quadrature(n: int, kappa: float, mass: float, hbar: float) -> float:
    p = PhysicalParams(kappa=kappa, mass=mass, hbar=hbar)
    c = coulomb_decay_rate(n, p)
    half, _ = adaptive_quadrature(lambda u: _coulomb_radial(n, u, p) ** 2, 0.0, math.inf, scale=n / c)
    return 2.0 * half


def coulomb_norm_quadrature(n: int, p: PhysicalParams) -> float:
    """Full-line norm of the unnormalized states by adaptive quadrature."""
    _check_level(n)
    return _norm_by_quadrature(n, p.kappa, p.mass, p.hbar)


def coulomb_wavefunction(
    n: int,
    branch: CoulombBranch,
    x: float,
    p: PhysicalParams,
    normalized: bool = False,
) -> ComplexAmplitude:
    """
    Degenerate Coulomb partner psi_A or psi_B at x.

    On x > 0 both equal x exp(-i lambda x/hbar) exp(-kappa m x/n hbar^2)
    F(1-n, 2, 2 kappa m x/n hbar^2). On x < 0, psi_A carries the -x
    prefactor (so |psi_A| is even) and psi_B keeps +x (odd). The default is
    unnormalized; ``normalized`` divides by the quadrature norm.
    """
    _check_level(n)
    branch = CoulombBranch(branch)
    value = _coulomb_radial(n, abs(x), p) * gauge_phase(x, p)
    if x < 0 and branch is CoulombBranch.B:
        value = -value
    if normalized:
        value /= math.sqrt(coulomb_norm_quadrature(n, p))
    return value


def coulomb_effective_quantum_number(energy: float, p: PhysicalParams) -> float:
    """nu with E = -kappa^2 m/(2 hbar^2 nu^2) - lambda^2/2m; integer on the spectrum."""
    shifted = energy - p.gauge_shift
    if shifted >= 0:
        raise ParameterError(f"Energy {energy} is not below the continuum edge {p.gauge_shift}")
    return p.kappa * math.sqrt(p.mass) / (p.hbar * math.sqrt(-2.0 * shifted))


def coulomb_decaying_solution(energy: float, x: float, p: PhysicalParams) -> ComplexAmplitude:
    """
    Solution regular at the origin for any bound-region energy, x >= 0.

    Built from the general 1F1 path; it only decays at large x when the
    effective quantum number is an integer.
    """
    if x < 0:
        raise ParameterError(f"Solution defined for x >= 0, got {x}")
    nu = coulomb_effective_quantum_number(energy, p)
    c = p.kappa * p.mass / (nu * p.hbar ** 2)
    return x * math.exp(-c * x) * kummer_1f1(1.0 - nu, 2.0, 2.0 * c * x) * gauge_phase(x, p)


# --- bundled states ---------------------------------------------------------

def bound_state(
    kind: str,
    n: int,
    p: PhysicalParams,
    branch: Optional[CoulombBranch] = None,
    normalized: bool = False,
) -> BoundState:
    """
    Energy and wavefunction for ``kind`` in {"linear", "delta-well", "coulomb"}.
    """
    if kind == "linear":
        return BoundState(kind, n, linear_energy(n, p), lambda x: linear_wavefunction(n, x, p))
    if kind == "delta-well":
        if n != 1:
            raise ParameterError("The delta well has a single bound state (n = 1)")
        return BoundState(kind, 1, delta_well_energy(p), lambda x: delta_well_wavefunction(x, p))
    if kind == "coulomb":
        chosen = CoulombBranch(branch or CoulombBranch.A)
        return BoundState(
            kind,
            n,
            coulomb_energy(n, p),
            lambda x: coulomb_wavefunction(n, chosen, x, p, normalized=normalized),
        )
    raise ParameterError(f"Unknown bound-state kind: {kind}")


def potential(kind: str, p: PhysicalParams) -> Callable[[float], float]:
    """Scalar potential for ``kind`` away from its singular point."""
    if kind == "linear":
        return lambda x: p.slope * x
    if kind == "delta-well":
        return lambda x: 0.0
    if kind == "coulomb":
        return lambda x: -p.kappa / abs(x)
    raise ParameterError(f"Unknown bound-state kind: {kind}")
