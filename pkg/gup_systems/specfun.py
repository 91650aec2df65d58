"""
Special functions for the deformed bound-state and Stark solutions.

Airy functions use the Maclaurin series near the origin, Taylor
continuation from precomputed anchors on the oscillatory side and the
classical asymptotic expansions far out. Gamma is the Lanczos
approximation. Kummer's function and the Laguerre polynomials are summed
directly; the polynomial cases used by the Coulomb states are exact
finite sums.
"""
import math
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .errors import (
    AiryOverflowError,
    ConvergenceError,
    FormulaMismatchError,
    ParameterError,
)
from .logging_config import get_logger
from .oracle.quadrature import adaptive_quadrature

logger = get_logger(__name__)

# Lanczos coefficients, g = 7
LANCZOS_G = 7
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

AI_0 = 0.35502805388781723926  # 3^(-2/3) / Gamma(2/3)
AI_PRIME_0 = -0.25881940379280679840  # -3^(-1/3) / Gamma(1/3)
BI_0 = 0.61492662744600073515  # 3^(-1/6) / Gamma(2/3)
BI_PRIME_0 = 0.44828835735382635791  # 3^(1/6) / Gamma(1/3)

MACLAURIN_UPPER = 5.5
MACLAURIN_LOWER = -4.5
CONTINUATION_LOWER = -9.0
ANCHOR_STEP = 0.5
BI_SERIES_UPPER = 12.0
SERIES_EPS = 1e-17
SERIES_CAP = 600

ZERO_ITERATION_CAP = 50
ZERO_TOL = 1e-13

KUMMER_RTOL = 1e-14
KUMMER_TERM_CAP = 10000

OVERLAP_GUARD_RTOL = 1e-6
OVERLAP_QUAD_TOL = 1e-11


def gamma(x: float) -> float:
    """Gamma function by the Lanczos approximation with reflection below 1/2."""
    if x < 0.5:
        if x == math.floor(x):
            raise ParameterError(f"Gamma has a pole at {x}")
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    x -= 1.0
    acc = LANCZOS_COEFFS[0]
    for i in range(1, len(LANCZOS_COEFFS)):
        acc += LANCZOS_COEFFS[i] / (x + i)
    t = x + LANCZOS_G + 0.5
    # split the power so t**(x+0.5) does not overflow before exp(-t) is applied
    half = t ** (0.5 * (x + 0.5))
    return math.sqrt(2.0 * math.pi) * half * (half * math.exp(-t)) * acc


def binomial(r: float, j: int) -> float:
    """Generalized binomial coefficient C(r, j) for real r and integer j."""
    if j < 0:
        return 0.0
    result = 1.0
    for i in range(j):
        result *= (r - i) / (i + 1)
    return result


# ---------------------------------------------------------------------------
# Airy functions
# ---------------------------------------------------------------------------

def _asymptotic_coefficients(count: int = 60) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    u = [1.0]
    v = [1.0]
    for k in range(1, count):
        uk = u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
        u.append(uk)
        v.append(-uk * (6 * k + 1) / (6 * k - 1))
    return tuple(u), tuple(v)


_U, _V = _asymptotic_coefficients()


def _power_sum(x3: float, first: float, start: int, pair: int) -> float:
    """Sum every third power-series term; pair selects the denominator shape."""
    term = first
    total = term
    scale = abs(term)
    j = start
    for _ in range(SERIES_CAP):
        if pair == 0:
            term *= x3 / ((j + 2) * (j + 3))
        else:
            term *= x3 / ((j + 1) * (j + 3))
        j += 3
        total += term
        scale += abs(term)
        if abs(term) <= SERIES_EPS * scale:
            return total
    raise ConvergenceError(f"Airy power series did not settle after {SERIES_CAP} terms")


def _maclaurin(x: float, y0: float, yp0: float) -> Tuple[float, float]:
    # y = sum c_j x^j with c_{j+3} = c_j / ((j+2)(j+3));
    # y' = sum d_j x^j with d_{j+3} = d_j / ((j+1)(j+3)), d_0 = c_1, d_2 = c_0 / 2
    x3 = x * x * x
    value = _power_sum(x3, y0, 0, 0) + _power_sum(x3, yp0 * x, 1, 0)
    deriv = _power_sum(x3, yp0, 0, 1) + _power_sum(x3, 0.5 * y0 * x * x, 2, 1)
    return value, deriv


def _taylor_step(x0: float, y: float, yp: float, d: float) -> Tuple[float, float]:
    """Advance a solution of y'' = x y from x0 to x0 + d."""
    # a_{j+1} = (x0 a_{j-1} + a_{j-2}) / (j (j+1)), a_2 = x0 a_0 / 2
    coeffs = [y, yp, 0.5 * x0 * y]
    value = y + yp * d + coeffs[2] * d * d
    deriv = yp + 2.0 * coeffs[2] * d
    value_scale = abs(value)
    deriv_scale = abs(deriv)
    power = d * d
    quiet = 0
    for j in range(2, SERIES_CAP):
        nxt = (x0 * coeffs[j - 1] + coeffs[j - 2]) / (j * (j + 1))
        coeffs.append(nxt)
        dterm = (j + 1) * nxt * power
        power *= d
        term = nxt * power
        value += term
        deriv += dterm
        value_scale += abs(term)
        deriv_scale += abs(dterm)
        if abs(term) <= SERIES_EPS * value_scale and abs(dterm) <= SERIES_EPS * deriv_scale:
            quiet += 1
            # every third coefficient can vanish on its own at x0 = 0
            if quiet >= 3:
                return value, deriv
        else:
            quiet = 0
    raise ConvergenceError("Airy Taylor continuation did not settle")


@lru_cache(maxsize=None)
def _continuation_anchors() -> Tuple[Tuple[float, float, float, float, float], ...]:
    """Values (x0, Ai, Ai', Bi, Bi') on a half-unit grid from 0 down to the asymptotic region."""
    anchors = [(0.0, AI_0, AI_PRIME_0, BI_0, BI_PRIME_0)]
    steps = int(round(-CONTINUATION_LOWER / ANCHOR_STEP))
    for _ in range(steps):
        x0, ai, aip, bi, bip = anchors[-1]
        ai, aip = _taylor_step(x0, ai, aip, -ANCHOR_STEP)
        bi, bip = _taylor_step(x0, bi, bip, -ANCHOR_STEP)
        anchors.append((x0 - ANCHOR_STEP, ai, aip, bi, bip))
    return tuple(anchors)


def _continued(x: float, which: int) -> Tuple[float, float]:
    index = int(round(-x / ANCHOR_STEP))
    anchor = _continuation_anchors()[index]
    x0 = anchor[0]
    y, yp = anchor[1 + 2 * which], anchor[2 + 2 * which]
    return _taylor_step(x0, y, yp, x - x0)


def _split_series(coeffs: Tuple[float, ...], xi: float) -> Tuple[float, float]:
    """Even and odd parts of sum (-1)^floor(k/2) c_k xi^-k, cut at the smallest term."""
    even = odd = 0.0
    last = math.inf
    power = 1.0
    for k, c in enumerate(coeffs):
        term = c * power
        if (k // 2) % 2:
            term = -term
        if abs(term) > last:
            break
        if k % 2:
            odd += term
        else:
            even += term
        if abs(term) <= SERIES_EPS * (abs(even) + abs(odd)):
            break
        last = abs(term)
        power /= xi
    return even, odd


def _plain_series(coeffs: Tuple[float, ...], xi: float, alternate: bool) -> float:
    total = 0.0
    last = math.inf
    power = 1.0
    for k, c in enumerate(coeffs):
        term = c * power
        if alternate and k % 2:
            term = -term
        if abs(term) > last:
            break
        total += term
        if abs(term) <= SERIES_EPS * abs(total):
            break
        last = abs(term)
        power /= xi
    return total


def _oscillatory(z: float) -> Tuple[float, float, float, float]:
    """Ai, Ai', Bi, Bi' at x = -z for large z."""
    xi = 2.0 / 3.0 * z * math.sqrt(z)
    theta = xi - math.pi / 4.0
    c, s = math.cos(theta), math.sin(theta)
    p, q = _split_series(_U, xi)
    r, t = _split_series(_V, xi)
    quarter = z ** 0.25
    amp = 1.0 / (math.sqrt(math.pi) * quarter)
    damp = quarter / math.sqrt(math.pi)
    ai = amp * (c * p + s * q)
    aip = damp * (s * r - c * t)
    bi = amp * (-s * p + c * q)
    bip = damp * (c * r + s * t)
    return ai, aip, bi, bip


def _ai_pair(x: float) -> Tuple[float, float]:
    if x > MACLAURIN_UPPER:
        xi = 2.0 / 3.0 * x * math.sqrt(x)
        decay = math.exp(-xi) / (2.0 * math.sqrt(math.pi))
        quarter = x ** 0.25
        ai = decay / quarter * _plain_series(_U, xi, alternate=True)
        aip = -decay * quarter * _plain_series(_V, xi, alternate=True)
        return ai, aip
    if x >= MACLAURIN_LOWER:
        return _maclaurin(x, AI_0, AI_PRIME_0)
    if x >= CONTINUATION_LOWER:
        return _continued(x, 0)
    ai, aip, _, _ = _oscillatory(-x)
    return ai, aip


def _bi_pair(x: float) -> Tuple[float, float]:
    if x > BI_SERIES_UPPER:
        xi = 2.0 / 3.0 * x * math.sqrt(x)
        try:
            growth = math.exp(xi) / math.sqrt(math.pi)
        except OverflowError as exc:
            raise AiryOverflowError(f"Bi({x}) exceeds double range") from exc
        quarter = x ** 0.25
        bi = growth / quarter * _plain_series(_U, xi, alternate=False)
        bip = growth * quarter * _plain_series(_V, xi, alternate=False)
        if math.isinf(bi) or math.isinf(bip):
            raise AiryOverflowError(f"Bi({x}) exceeds double range")
        return bi, bip
    if x >= MACLAURIN_LOWER:
        return _maclaurin(x, BI_0, BI_PRIME_0)
    if x >= CONTINUATION_LOWER:
        return _continued(x, 1)
    _, _, bi, bip = _oscillatory(-x)
    return bi, bip


def _check_finite(x: float) -> None:
    if not math.isfinite(x):
        raise ParameterError(f"Airy argument must be finite, got {x}")


def airy_ai(x: float) -> float:
    """Ai(x)."""
    _check_finite(x)
    return _ai_pair(x)[0]


def airy_ai_prime(x: float) -> float:
    """Ai'(x)."""
    _check_finite(x)
    return _ai_pair(x)[1]


def airy_bi(x: float) -> float:
    """
    Bi(x).

    Raises:
        AiryOverflowError: for x past roughly 104, where Bi leaves double range
    """
    _check_finite(x)
    return _bi_pair(x)[0]


def airy_bi_prime(x: float) -> float:
    """Bi'(x); same overflow behaviour as airy_bi."""
    _check_finite(x)
    return _bi_pair(x)[1]


@dataclass(frozen=True)
class AiryZeroTable:
    """Zeros a_1 > a_2 > ... of Ai, indexed from 1."""

    zeros: Tuple[float, ...]

    def __getitem__(self, n: int) -> float:
        if n < 1 or n > len(self.zeros):
            raise IndexError(f"Airy zero index {n} outside 1..{len(self.zeros)}")
        return self.zeros[n - 1]

    def __len__(self) -> int:
        return len(self.zeros)


def _zero_seed(n: int) -> float:
    t = 3.0 * math.pi * (4 * n - 1) / 8.0
    return -(t ** (2.0 / 3.0)) * (1.0 + 5.0 / (48.0 * t * t))


@lru_cache(maxsize=1024)
def airy_zero(n: int) -> float:
    """
    n-th zero of Ai by Newton iteration from the asymptotic seed.

    Args:
        n: Zero index, 1-based

    Returns:
        a_n < 0

    Raises:
        ParameterError: n < 1
        ConvergenceError: Newton did not converge within the iteration cap
    """
    if n < 1:
        raise ParameterError(f"Airy zero index must be >= 1, got {n}")
    x = _zero_seed(n)
    for iteration in range(ZERO_ITERATION_CAP):
        ai, aip = _ai_pair(x)
        step = ai / aip
        x -= step
        if abs(ai) < ZERO_TOL or abs(step) <= 8 * sys.float_info.epsilon * abs(x):
            logger.debug("airy_zero(%d) = %.17g after %d iterations", n, x, iteration + 1)
            return x
    raise ConvergenceError(f"Newton iteration for Airy zero {n} did not converge")


@lru_cache(maxsize=16)
def airy_zeros(count: int) -> AiryZeroTable:
    """Table of the first ``count`` zeros of Ai."""
    if count < 1:
        raise ParameterError(f"Zero count must be >= 1, got {count}")
    return AiryZeroTable(tuple(airy_zero(n) for n in range(1, count + 1)))


# ---------------------------------------------------------------------------
# Confluent hypergeometric and Laguerre
# ---------------------------------------------------------------------------

def _is_nonpositive_integer(value: float) -> bool:
    return value <= 0 and value == math.floor(value)


def _kummer_terms(a: float, b: float, z: float) -> Tuple[float, float]:
    """Value of 1F1(a; b; z) and the sum of absolute terms."""
    if _is_nonpositive_integer(b):
        raise ParameterError(f"1F1 undefined for non-positive integer b = {b}")

    if _is_nonpositive_integer(a):
        term = 1.0
        total = 1.0
        scale = 1.0
        for k in range(int(-a)):
            term *= (a + k) / (b + k) * z / (k + 1)
            total += term
            scale += abs(term)
        return total, scale

    if z < 0:
        # Kummer transformation keeps the summed series free of cancellation
        value, scale = _kummer_terms(b - a, b, -z)
        weight = math.exp(z)
        return weight * value, weight * scale

    term = 1.0
    total = 1.0
    scale = 1.0
    for k in range(KUMMER_TERM_CAP):
        term *= (a + k) / (b + k) * z / (k + 1)
        total += term
        scale += abs(term)
        if abs(term) <= KUMMER_RTOL * abs(total):
            return total, scale
    raise ConvergenceError(f"1F1({a}; {b}; {z}) not converged after {KUMMER_TERM_CAP} terms")


def kummer_1f1(a: float, b: float, z: float) -> float:
    """
    Confluent hypergeometric function F(a, b, z).

    A non-positive integer ``a`` gives the terminating polynomial; otherwise
    the Maclaurin series is summed to relative 1e-14.

    Raises:
        ParameterError: b is a non-positive integer
        ConvergenceError: the term cap was reached
    """
    return _kummer_terms(a, b, z)[0]


def kummer_residual(a: float, b: float, z: float) -> float:
    """Relative residual of z F'' + (b - z) F' - a F = 0, derivatives from contiguous relations."""
    f, f_scale = _kummer_terms(a, b, z)
    d1, d1_scale = _kummer_terms(a + 1, b + 1, z)
    d2, d2_scale = _kummer_terms(a + 2, b + 2, z)
    c1 = a / b
    c2 = a * (a + 1) / (b * (b + 1))
    residual = z * c2 * d2 + (b - z) * c1 * d1 - a * f
    scale = abs(z * c2) * d2_scale + abs((b - z) * c1) * d1_scale + abs(a) * f_scale
    if scale == 0.0:
        return abs(residual)
    return abs(residual) / scale


def laguerre(n: int, mu: float, z: float) -> float:
    """
    Generalized Laguerre polynomial L_n^mu(z) by the three-term recurrence.

    Raises:
        ParameterError: n < 0 or mu <= -1
    """
    if n < 0:
        raise ParameterError(f"Laguerre degree must be >= 0, got {n}")
    if mu <= -1:
        raise ParameterError(f"Laguerre order must exceed -1, got {mu}")
    prev = 1.0
    if n == 0:
        return prev
    curr = 1.0 + mu - z
    for k in range(1, n):
        prev, curr = curr, ((2 * k + 1 + mu - z) * curr - (k + mu) * prev) / (k + 1)
    return curr


def laguerre_from_kummer(n: int, mu: float, z: float) -> float:
    """L_n^mu(z) through Gamma(mu+1+n) / (n! Gamma(mu+1)) * F(-n, mu+1, z)."""
    if n < 0:
        raise ParameterError(f"Laguerre degree must be >= 0, got {n}")
    if mu <= -1:
        raise ParameterError(f"Laguerre order must exceed -1, got {mu}")
    prefactor = gamma(mu + 1 + n) / (math.factorial(n) * gamma(mu + 1))
    return prefactor * kummer_1f1(-n, mu + 1, z)


def laguerre_overlap_closed_form(alpha: float, n: int, beta: float) -> float:
    """Gamma(alpha+1) * sum_k C(alpha-beta, n-k)^2 C(alpha+k, k)."""
    total = 0.0
    for k in range(n + 1):
        total += binomial(alpha - beta, n - k) ** 2 * binomial(alpha + k, k)
    return gamma(alpha + 1) * total


def laguerre_overlap_quadrature(alpha: float, n: int, beta: float, tol: float = OVERLAP_QUAD_TOL) -> float:
    """The same integral by adaptive quadrature over [0, inf)."""

    def integrand(z: float) -> float:
        if z <= 0.0:
            return 0.0
        return z ** alpha * math.exp(-z) * laguerre(n, beta, z) ** 2

    value, _ = adaptive_quadrature(integrand, 0.0, math.inf, tol=tol, scale=alpha + 2 * n + 1)
    return value


def laguerre_weighted_integral(alpha: float, n: int, beta: float, check: bool = True) -> float:
    """
    Integral of z^alpha e^-z [L_n^beta(z)]^2 over [0, inf).

    The closed form is certified against quadrature on every call unless
    ``check`` is False.

    Args:
        alpha: Weight exponent, > -1
        n: Polynomial degree
        beta: Laguerre order, > -1
        check: Run the quadrature guard

    Returns:
        Closed-form value

    Raises:
        ParameterError: invalid alpha, n or beta
        FormulaMismatchError: closed form and quadrature differ by more than 1e-6 relative
    """
    if alpha <= -1:
        raise ParameterError(f"Weight exponent must exceed -1, got {alpha}")
    if n < 0:
        raise ParameterError(f"Laguerre degree must be >= 0, got {n}")
    if beta <= -1:
        raise ParameterError(f"Laguerre order must exceed -1, got {beta}")

    closed = laguerre_overlap_closed_form(alpha, n, beta)
    if check:
        numeric = laguerre_overlap_quadrature(alpha, n, beta)
        rel = abs(closed - numeric) / abs(numeric)
        logger.debug("overlap(%s, %d, %s): closed %.17g quad %.17g rel %.2e", alpha, n, beta, closed, numeric, rel)
        if rel > OVERLAP_GUARD_RTOL:
            raise FormulaMismatchError(
                f"Laguerre overlap closed form {closed} disagrees with quadrature {numeric}",
                closed_form=closed,
                numeric=numeric,
            )
    return closed
