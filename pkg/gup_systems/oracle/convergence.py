"""
Log-log slope fits for convergence orders.
"""
from typing import Sequence

import numpy as np
from sklearn.linear_model import LinearRegression

from ..errors import ParameterError


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log|y| against log x."""
    x = np.asarray(xs, dtype=float)
    y = np.abs(np.asarray(ys, dtype=float))
    if len(x) != len(y) or len(x) < 2:
        raise ParameterError("Slope fit needs at least two paired samples")
    if np.any(x <= 0) or np.any(y == 0):
        raise ParameterError("Slope fit needs positive abscissae and non-zero values")
    model = LinearRegression().fit(np.log(x).reshape(-1, 1), np.log(y))
    return float(model.coef_[0])


def convergence_order(spacings: Sequence[float], errors: Sequence[float]) -> float:
    """Observed order p in error ~ h^p."""
    return loglog_slope(spacings, errors)
