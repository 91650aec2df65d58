"""
Exception types raised by gup-systems.
"""


class GupError(Exception):
    """Base class for every error raised by the package."""


class ParameterError(GupError, ValueError):
    """Physical or numerical input outside the domain of an operation."""


class ConvergenceError(GupError, RuntimeError):
    """An iterative method hit its cap without meeting its tolerance."""


class QuadratureError(ConvergenceError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class FormulaMismatchError(GupError, ArithmeticError):
    """A closed-form value disagrees with its numerical cross-check."""

    def __init__(self, message: str, closed_form: float, numeric: float):
        super().__init__(message)
        self.closed_form = closed_form
        self.numeric = numeric


class AiryOverflowError(GupError, OverflowError):
    """Bi(x) grows past what a double can hold."""
