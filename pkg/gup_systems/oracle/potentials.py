"""
Potential samplers for the grid and transfer oracles.

Samplers take a numpy array of positions. Singular potentials come with a
regularization: the delta as a single-cell spike or a unit-area Gaussian,
the Coulomb tail softened as -kappa / sqrt(x^2 + a^2).
"""
import math
from typing import Callable

import numpy as np

from ..errors import ParameterError


def linear(slope: float) -> Callable[[np.ndarray], np.ndarray]:
    return lambda x: slope * np.asarray(x, dtype=float)


def harmonic(mass: float, omega: float) -> Callable[[np.ndarray], np.ndarray]:
    """m omega^2 x^2 / 2."""
    return lambda x: 0.5 * mass * omega ** 2 * np.asarray(x, dtype=float) ** 2


def free() -> Callable[[np.ndarray], np.ndarray]:
    return lambda x: np.zeros_like(np.asarray(x, dtype=float))


def spike(strength: float, sign: float = -1.0) -> Callable[[np.ndarray], np.ndarray]:
    """
    sign * V / h on the node nearest the origin, zero elsewhere.

    The sampler reads h from the node array, so it must be given the full
    grid (as build_hamiltonian does).
    """

    def sample(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.size < 2:
            raise ParameterError("Spike regularization needs at least two nodes")
        h = x[1] - x[0]
        values = np.zeros_like(x)
        values[np.argmin(np.abs(x))] = sign * strength / h
        return values

    return sample


def gaussian_delta(strength: float, width: float) -> Callable[[float], float]:
    """Gaussian of area ``strength`` and standard deviation ``width`` (scalar sampler)."""
    if width <= 0:
        raise ParameterError(f"Regularization width must be positive, got {width}")
    peak = strength / (width * math.sqrt(2.0 * math.pi))

    def sample(x: float) -> float:
        return peak * math.exp(-0.5 * (x / width) ** 2)

    return sample


def softened_coulomb(kappa: float, softening: float) -> Callable[[np.ndarray], np.ndarray]:
    """-kappa / sqrt(x^2 + a^2)."""
    if softening <= 0:
        raise ParameterError(f"Softening must be positive, got {softening}")
    return lambda x: -kappa / np.sqrt(np.asarray(x, dtype=float) ** 2 + softening ** 2)
