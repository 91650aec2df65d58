"""
Residuals of the deformed stationary equation

    (hbar^2/2m) psi'' + (i hbar lambda/m) psi' + (E - V) psi = 0

with derivatives from Richardson-extrapolated central differences.
"""
from typing import Callable, Iterable, Tuple

from ..errors import ParameterError
from ..params import PhysicalParams

DEFAULT_STEP = 0.05


def _central(f: Callable[[float], complex], x: float, h: float) -> Tuple[complex, complex]:
    plus, minus, mid = f(x + h), f(x - h), f(x)
    return (plus - minus) / (2.0 * h), (plus - 2.0 * mid + minus) / (h * h)


def richardson_derivatives(
    f: Callable[[float], complex], x: float, step: float = DEFAULT_STEP
) -> Tuple[complex, complex]:
    """First and second derivative at x, steps h, h/2, h/4 combined to O(h^6)."""
    if step <= 0:
        raise ParameterError(f"Difference step must be positive, got {step}")
    d1 = [None] * 3
    d2 = [None] * 3
    for i in range(3):
        d1[i], d2[i] = _central(f, x, step / 2 ** i)
    first = [(4.0 * d1[i + 1] - d1[i]) / 3.0 for i in range(2)]
    second = [(4.0 * d2[i + 1] - d2[i]) / 3.0 for i in range(2)]
    return (16.0 * first[1] - first[0]) / 15.0, (16.0 * second[1] - second[0]) / 15.0


def ode_residual(
    psi: Callable[[float], complex],
    energy: float,
    potential: Callable[[float], float],
    p: PhysicalParams,
    points: Iterable[float],
    step: float = DEFAULT_STEP,
) -> float:
    """
    Max over points of the equation residual, relative to the largest term.

    The scale is the maximum over all points of |E - V||psi|,
    (hbar^2/2m)|psi''| and (hbar |lambda| / m)|psi'|, so a wavefunction that
    is tiny at one point is not judged on that point alone.
    """
    kinetic = p.hbar ** 2 / (2.0 * p.mass)
    drift = 1j * p.hbar * p.lam / p.mass
    worst = 0.0
    scale = 0.0
    for x in points:
        first, second = richardson_derivatives(psi, x, step)
        value = psi(x)
        gap = energy - potential(x)
        residual = kinetic * second + drift * first + gap * value
        worst = max(worst, abs(residual))
        scale = max(scale, abs(gap * value), abs(kinetic * second), abs(drift * first))
    if scale == 0.0:
        return worst
    return worst / scale
