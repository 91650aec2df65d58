"""
Adaptive quadrature on finite and semi-infinite ranges.

Thin layer over ``scipy.integrate.quad`` that turns its warnings into
``QuadratureError`` and maps ``[a, inf)`` onto ``[0, 1)`` with the
exponential substitution x = a - L*log(1 - t).
"""
import math
import warnings
from typing import Callable, Optional, Tuple

from scipy.integrate import IntegrationWarning, quad

from ..errors import ParameterError, QuadratureError
from ..logging_config import get_logger

logger = get_logger(__name__)

DEFAULT_TOL = 1e-11
SUBDIVISION_LIMIT = 400


def _semi_infinite(f: Callable[[float], float], a: float, scale: float) -> Callable[[float], float]:
    def mapped(t: float) -> float:
        rest = 1.0 - t
        if rest <= 0.0:
            return 0.0
        x = a - scale * math.log1p(-t)
        return f(x) * scale / rest

    return mapped


def adaptive_quadrature(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    scale: float = 1.0,
    abs_tol: float = 0.0,
    limit: int = SUBDIVISION_LIMIT,
    points: Optional[Tuple[float, ...]] = None,
) -> Tuple[float, float]:
    """
    Integrate a real function over [a, b].

    Args:
        f: Integrand, called with a float
        a: Lower limit (finite)
        b: Upper limit, may be ``math.inf``
        tol: Relative tolerance
        scale: Length scale L of the tail substitution (semi-infinite only)
        abs_tol: Absolute tolerance floor, 0 for purely relative control
        limit: Subdivision cap
        points: Interior break points (finite ranges only)

    Returns:
        (value, error_estimate)

    Raises:
        QuadratureError: when the tolerance is not met within the cap
    """
    if tol <= 0:
        raise ParameterError(f"Quadrature tolerance must be positive, got {tol}")
    if not math.isfinite(a):
        raise ParameterError("Lower limit must be finite")
    if scale <= 0:
        raise ParameterError(f"Tail scale must be positive, got {scale}")

    if math.isinf(b):
        integrand, lo, hi = _semi_infinite(f, a, scale), 0.0, 1.0
        points = None
    else:
        integrand, lo, hi = f, a, b

    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, error = quad(
                integrand, lo, hi, epsabs=abs_tol, epsrel=tol, limit=limit, points=points
            )
        except IntegrationWarning as exc:
            raise QuadratureError(f"Quadrature over [{a}, {b}] did not converge: {exc}") from exc

    logger.debug("quad [%s, %s] -> %.17g (err %.3g)", a, b, value, error)
    return value, error


def adaptive_quadrature_complex(
    f: Callable[[float], complex],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    scale: float = 1.0,
    limit: int = SUBDIVISION_LIMIT,
) -> Tuple[complex, float]:
    """Integrate a complex function; the imaginary part is held to tol times the real magnitude."""
    real, real_err = adaptive_quadrature(
        lambda x: f(x).real, a, b, tol=tol, scale=scale, limit=limit
    )
    floor = tol * max(abs(real), 1e-300)
    imag, imag_err = adaptive_quadrature(
        lambda x: f(x).imag, a, b, tol=tol, scale=scale, abs_tol=floor, limit=limit
    )
    return complex(real, imag), real_err + imag_err
