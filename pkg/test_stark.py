"""Stark splitting of the degenerate Coulomb pair."""
import cmath
import math

import numpy as np
import pytest

from gup_systems import stark
from gup_systems.errors import ParameterError
from gup_systems.params import PhysicalParams

UNIT = PhysicalParams()
FIELD = UNIT.e_field


def test_closed_form_ground_level():
    assert stark.stark_matrix_element(1, UNIT) == pytest.approx(0.75 * FIELD, rel=1e-15)
    assert stark.stark_matrix_element(2, UNIT.with_updates(field=1.0)) == pytest.approx(24.0, rel=1e-15)


@pytest.mark.parametrize("n", range(1, 5))
def test_quadrature_matches_closed_form(n):
    closed = stark.stark_matrix_element(n, UNIT, stark.CLOSED_FORM)
    assert stark.stark_matrix_element(n, UNIT, stark.QUADRATURE) == pytest.approx(closed, rel=1e-9)


@pytest.mark.parametrize("n", [10, 12])
def test_quadrature_high_levels(n):
    # the integrand grows like x^(2n+1) before the exponential wins
    closed = stark.closed_form_h12(n, UNIT)
    assert stark.stark_matrix_element(n, UNIT, stark.QUADRATURE) == pytest.approx(closed, rel=1e-9)


def test_n5_scaling():
    base = stark.closed_form_h12(1, UNIT)
    for n in range(2, 7):
        assert stark.closed_form_h12(n, UNIT) / base == pytest.approx(n ** 5, rel=1e-14)


def test_matrix_elements_independent_of_lambda():
    values = [stark.stark_matrix_element(2, UNIT.with_lambda(lam), stark.QUADRATURE) for lam in (0.0, 2.0)]
    assert values[1] == pytest.approx(values[0], rel=1e-10)


@pytest.mark.parametrize("n", [1, 3])
def test_quadrature_matrix_structure(n):
    matrix = stark.stark_matrix(n, UNIT.with_lambda(0.5), stark.QUADRATURE)
    h12 = matrix[0, 1]
    assert abs(matrix[0, 0]) < 1e-10 * abs(h12)
    assert abs(matrix[1, 1]) < 1e-10 * abs(h12)
    assert matrix[1, 0] == pytest.approx(h12, rel=1e-12)


def test_secular_roots_order():
    assert stark.secular_roots(np.array([[0.0, 0.3], [0.3, 0.0]])) == pytest.approx((0.3, -0.3))
    assert stark.secular_roots(np.array([[0.0, -0.3], [-0.3, 0.0]])) == pytest.approx((-0.3, 0.3))
    with pytest.raises(ParameterError):
        stark.secular_roots(np.zeros((3, 3)))


def test_first_order_splitting():
    plus, minus = stark.stark_first_order(1, UNIT)
    assert plus == pytest.approx(0.75 * FIELD)
    assert plus + minus == pytest.approx(0.0, abs=1e-18)
    assert stark.stark_first_order(1, UNIT.with_updates(field=0.0)) == (0.0, 0.0)


def test_split_wavefunctions_one_sided():
    p = UNIT.with_lambda(0.4)
    assert stark.stark_split_wavefunction(2, 1, -1.0, p) == 0
    assert stark.stark_split_wavefunction(2, 2, 1.0, p) == 0
    x = 1.3
    expected = math.sqrt(2.0) * x * cmath.exp(-0.4j * x) * math.exp(-x)
    assert stark.stark_split_wavefunction(1, 1, x, p) == pytest.approx(expected)
    with pytest.raises(ParameterError):
        stark.stark_split_wavefunction(1, 3, x, p)


@pytest.mark.parametrize("n", [1, 2])
def test_second_order_matches_first(n):
    first = stark.closed_form_h12(n, UNIT)
    plus, minus = stark.stark_second_order(n, UNIT.with_lambda(0.7), stark.QUADRATURE)
    assert plus == pytest.approx(first, rel=1e-9)
    assert minus == pytest.approx(-first, rel=1e-9)


@pytest.mark.parametrize("n", [10, 12])
def test_second_order_high_levels(n):
    first = stark.closed_form_h12(n, UNIT)
    plus, minus = stark.stark_second_order(n, UNIT.with_lambda(0.7), stark.QUADRATURE)
    assert plus == pytest.approx(first, rel=1e-9)
    assert minus == pytest.approx(-first, rel=1e-9)


def test_total_energies():
    plus, minus = stark.stark_total_energies(1, UNIT)
    assert plus == pytest.approx(-0.5 + 0.015)
    assert minus == pytest.approx(-0.5 - 0.015)
    plus, minus = stark.stark_total_energies(1, UNIT.with_updates(lam=1.0, field=0.0))
    assert plus == minus == pytest.approx(-1.0)


def test_report_fields():
    report = stark.stark_report(2, UNIT, stark.CLOSED_FORM, normalized=True)
    assert report.caveat is True
    assert report.h12 == pytest.approx(0.75 * 32 * FIELD)
    assert report.e1_first == pytest.approx(report.h12)
    assert report.e2_second == pytest.approx(-report.h12)
    # unit-norm states: (3/2) n^2 hbar^2 / (kappa m) * eE
    assert report.normalized_h12 == pytest.approx(1.5 * 4 * FIELD, rel=1e-9)
    assert stark.stark_report(1, UNIT, stark.CLOSED_FORM).normalized_h12 is None


def test_reports_keep_level_order():
    reports = stark.stark_reports([3, 1, 2], UNIT, stark.CLOSED_FORM, workers=2)
    assert [r.n for r in reports] == [3, 1, 2]


def test_invalid_inputs():
    with pytest.raises(ParameterError):
        stark.stark_matrix_element(0, UNIT)
    with pytest.raises(ParameterError):
        stark.stark_matrix_element(1, UNIT, method="perturbative")
