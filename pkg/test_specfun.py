"""Special functions against scipy.special as an independent reference."""
import math

import pytest
from scipy import special

from gup_systems import specfun
from gup_systems.errors import AiryOverflowError, FormulaMismatchError, ParameterError

AIRY_POINTS = [-25.0, -12.5, -9.2, -8.7, -7.0, -4.6, -4.4, -1.0, 0.0, 0.7, 2.0, 5.4, 5.6, 8.0, 12.0]


@pytest.mark.parametrize("x", AIRY_POINTS)
def test_airy_ai_matches_reference(x):
    ai, aip, _, _ = special.airy(x)
    assert specfun.airy_ai(x) == pytest.approx(ai, rel=1e-9, abs=1e-12)
    assert specfun.airy_ai_prime(x) == pytest.approx(aip, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("x", [-20.0, -9.5, -6.0, -2.0, 0.0, 1.0, 4.0, 10.0, 15.0, 40.0])
def test_airy_bi_matches_reference(x):
    _, _, bi, bip = special.airy(x)
    assert specfun.airy_bi(x) == pytest.approx(bi, rel=1e-9, abs=1e-12)
    assert specfun.airy_bi_prime(x) == pytest.approx(bip, rel=1e-9, abs=1e-12)


def test_airy_bi_overflow():
    with pytest.raises(AiryOverflowError):
        specfun.airy_bi(200.0)


def test_airy_rejects_nan():
    with pytest.raises(ParameterError):
        specfun.airy_ai(float("nan"))


# a_1..a_10 to 20 digits (DLMF table)
AIRY_ZEROS = [
    -2.33810741045976703849,
    -4.08794944413097061664,
    -5.52055982809555105913,
    -6.78670809007175899878,
    -7.94413358712085312314,
    -9.02265085334098038016,
    -10.04017434155808593059,
    -11.00852430373326289324,
    -11.93601556323626251701,
    -12.82877675286575720041,
]


@pytest.mark.parametrize("n, a", enumerate(AIRY_ZEROS, start=1))
def test_airy_zeros_high_precision(n, a):
    assert specfun.airy_zero(n) == pytest.approx(a, abs=1e-12)


def test_airy_zeros_match_scipy():
    # scipy.special.ai_zeros is itself only good to about 1e-11
    reference = special.ai_zeros(10)[0]
    for n, a in enumerate(reference, start=1):
        assert specfun.airy_zero(n) == pytest.approx(a, abs=1e-10)


@pytest.mark.parametrize(
    "n, published", [(1, -2.33810), (2, -4.08794), (3, -5.52055), (4, -6.78670), (5, -7.94413)]
)
def test_airy_zeros_published_constants(n, published):
    assert specfun.airy_zero(n) == pytest.approx(published, abs=1e-5)


def test_airy_zero_table():
    table = specfun.airy_zeros(3)
    assert len(table) == 3
    assert table[1] > table[2] > table[3]
    with pytest.raises(IndexError):
        table[4]
    with pytest.raises(ParameterError):
        specfun.airy_zero(0)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.5, 6.0, 11.3, 25.0, -0.5, -3.7])
def test_gamma(x):
    assert specfun.gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)


def test_gamma_pole():
    with pytest.raises(ParameterError):
        specfun.gamma(-2.0)


def test_binomial_real_upper():
    assert specfun.binomial(5, 2) == pytest.approx(10.0)
    assert specfun.binomial(2.5, 2) == pytest.approx(2.5 * 1.5 / 2)
    assert specfun.binomial(3, -1) == 0.0


@pytest.mark.parametrize(
    "a, b, z",
    [(-3, 2, 5.0), (-7, 2, 6.0), (0.5, 1.5, 2.0), (1.2, 2.0, -3.0), (2.5, 3.0, 10.0), (-0.4, 2.0, 0.0)],
)
def test_kummer_matches_reference(a, b, z):
    assert specfun.kummer_1f1(a, b, z) == pytest.approx(special.hyp1f1(a, b, z), rel=1e-12, abs=1e-14)


@pytest.mark.parametrize("b", [0, -2])
def test_kummer_rejects_nonpositive_integer_b(b):
    with pytest.raises(ParameterError):
        specfun.kummer_1f1(1.0, b, 1.0)


def test_kummer_residual_small():
    for n in (1, 4, 9):
        assert specfun.kummer_residual(1 - n, 2, 7.5) < 1e-12
    assert specfun.kummer_residual(0.3, 1.7, 4.0) < 1e-12


@pytest.mark.parametrize("n", [0, 1, 2, 5, 12])
@pytest.mark.parametrize("mu", [0.0, 1.0, 2.5])
def test_laguerre_matches_reference(n, mu):
    for z in (0.5, 3.0, 10.0):
        expected = special.eval_genlaguerre(n, mu, z)
        assert specfun.laguerre(n, mu, z) == pytest.approx(expected, rel=1e-10, abs=1e-10)
        assert specfun.laguerre_from_kummer(n, mu, z) == pytest.approx(expected, rel=1e-10, abs=1e-10)


def test_laguerre_invalid():
    with pytest.raises(ParameterError):
        specfun.laguerre(-1, 0.0, 1.0)
    with pytest.raises(ParameterError):
        specfun.laguerre(2, -1.0, 1.0)


@pytest.mark.parametrize("n", range(1, 7))
def test_overlap_cubic_weight(n):
    assert specfun.laguerre_overlap_closed_form(3.0, n - 1, 1.0) == pytest.approx(6.0 * n ** 3, rel=1e-13)


@pytest.mark.parametrize("s", range(0, 6))
def test_overlap_quadratic_weight(s):
    assert specfun.laguerre_overlap_closed_form(2.0, s, 1.0) == pytest.approx(2.0 * (s + 1) ** 2, rel=1e-13)


@pytest.mark.parametrize("alpha, n, beta", [(3.0, 4, 1.0), (2.0, 3, 1.0), (2.5, 2, 0.5)])
def test_overlap_closed_form_vs_quadrature(alpha, n, beta):
    closed = specfun.laguerre_overlap_closed_form(alpha, n, beta)
    assert specfun.laguerre_overlap_quadrature(alpha, n, beta) == pytest.approx(closed, rel=1e-9)
    assert specfun.laguerre_weighted_integral(alpha, n, beta) == closed


def test_overlap_guard_catches_wrong_formula(monkeypatch):
    monkeypatch.setattr(specfun, "laguerre_overlap_closed_form", lambda alpha, n, beta: 1.0)
    with pytest.raises(FormulaMismatchError) as info:
        specfun.laguerre_weighted_integral(3.0, 2, 1.0)
    assert info.value.closed_form == 1.0
    assert info.value.numeric == pytest.approx(6.0 * 27, rel=1e-9)


def test_overlap_invalid_alpha():
    with pytest.raises(ParameterError):
        specfun.laguerre_weighted_integral(-1.0, 1, 1.0)
