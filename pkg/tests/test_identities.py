"""Identity tests: product form, recurrences, log-derivative reductions and the zero expansion."""

import pytest
from scipy import special

from bessel_core import bessel_j_log_deriv, eval_gbessel
from exceptions import BranchCutError, InvalidParameterError, PoleError
from identities import (
    eval_gbessel_via_product,
    log_deriv_gbessel_direct,
    log_deriv_gbessel_normalized,
    product_prefactor_residuals,
    recurrence_residuals,
    resolve_prefactor_exponent,
    weierstrass_log_deriv,
    weierstrass_tail_bound,
)
from models import GBesselParams
from zeros import bessel_j_zero


def test_product_form_collapses_for_a_equal_one():
    for params, z in [(GBesselParams.bessel_j(0.7), 0.8), (GBesselParams(a=1, b=2.5, p=1.3, c=1), 0.4 + 0.9j)]:
        direct = eval_gbessel(params, z)
        assert abs(eval_gbessel_via_product(params, z) - direct) <= 1e-14 * abs(direct)


def test_product_form_is_exact_without_the_series_tail():
    params = GBesselParams(a=3, b=5, p=2.1, c=0)
    residuals = product_prefactor_residuals(params, 1.3)
    assert residuals["(a-1)/2"] <= 1e-12
    assert residuals["(a-1)/a"] > 1e-3
    assert resolve_prefactor_exponent(GBesselParams(a=3, b=5, p=2.1, c=1), 1.3) == "(a-1)/2"


def test_prefactor_candidates_coincide_at_a_two():
    residuals = product_prefactor_residuals(GBesselParams(a=2, b=3, p=1.4, c=1), 0.7)
    assert residuals["(a-1)/2"] <= 1e-12
    assert residuals["(a-1)/a"] <= 1e-12


def test_product_form_departs_from_series_when_c_is_nonzero():
    params = GBesselParams(a=2, b=3, p=1.4, c=1)
    direct = eval_gbessel(params, 0.7)
    product = eval_gbessel_via_product(params, 0.7)
    assert abs(product - direct) / abs(direct) > 1e-3


def test_product_form_rejects_the_negative_axis_and_low_orders():
    with pytest.raises(BranchCutError):
        eval_gbessel_via_product(GBesselParams(a=2, b=3, p=1.4, c=1), -0.5)
    with pytest.raises(InvalidParameterError):
        eval_gbessel_via_product(GBesselParams(a=2, b=3, p=-2.5, c=1), 0.5)
    with pytest.raises(InvalidParameterError):
        eval_gbessel_via_product(GBesselParams(a=2, b=3, p=1.4, c=1), 0.5, exponent="a")


@pytest.mark.parametrize(
    "params, z, tol",
    [
        (GBesselParams(a=1, b=1, p=0.7, c=1), 0.5, 1e-12),
        (GBesselParams(a=2, b=3, p=1.2, c=1), 0.9j, 1e-11),
        (GBesselParams(a=3, b=2.2, p=0.8, c=0), 0.5, 1e-14),
        (GBesselParams(a=3, b=5, p=2.1, c=1), 0.6 - 0.3j, 1e-11),
    ],
)
def test_recurrence_residuals(params, z, tol):
    assert max(recurrence_residuals(params, z)) <= tol


def test_recurrence_residuals_require_nonzero_argument():
    with pytest.raises(InvalidParameterError):
        recurrence_residuals(GBesselParams.bessel_j(0.7), 0)


def test_normalized_log_derivative_for_a_equal_one():
    for nu, z in [(0.7, 0.5), (-0.4, 0.9), (2.3, 1.1 + 0.6j)]:
        closed = log_deriv_gbessel_normalized(1, nu, z)
        assert abs(closed - log_deriv_gbessel_direct(1, nu, z)) <= 1e-10 * abs(closed)
        assert abs(closed - bessel_j_log_deriv(nu, z)) <= 1e-12 * abs(closed)


def test_normalized_log_derivative_origin_limit():
    for a, nu in [(1, 0.7), (2, 0.9), (3, 0.8)]:
        assert log_deriv_gbessel_normalized(a, nu, 0) == pytest.approx(a * nu - a + 1.0)
        assert log_deriv_gbessel_direct(a, nu, 0) == pytest.approx(a * nu - a + 1.0)


def test_normalized_log_derivative_departs_for_larger_a():
    closed = log_deriv_gbessel_normalized(2, 0.7, 0.5)
    direct = log_deriv_gbessel_direct(2, 0.7, 0.5)
    assert abs(closed - direct) / abs(direct) > 1e-3


def test_normalized_log_derivative_domain():
    with pytest.raises(InvalidParameterError):
        log_deriv_gbessel_normalized(2, -0.6, 0.5)


def test_weierstrass_origin_and_symmetry():
    assert weierstrass_log_deriv(0.7, 0) == 0.7
    for z in (0.5, 0.3 + 0.8j):
        assert weierstrass_log_deriv(0.7, z) == pytest.approx(weierstrass_log_deriv(0.7, -z), rel=1e-14)


def test_weierstrass_real_axis_within_tail_bound():
    series = bessel_j_log_deriv(0.7, 0.5).real
    approx = weierstrass_log_deriv(0.7, 0.5, n_zeros=200)
    gap = approx.real - series
    assert 0.0 <= gap <= weierstrass_tail_bound(0.5, 200) + 1e-12
    assert abs(approx.imag) == 0.0


def test_weierstrass_imaginary_axis():
    series = bessel_j_log_deriv(0.7, 0.5j)
    approx = weierstrass_log_deriv(0.7, 0.5j, n_zeros=200)
    assert abs(approx.imag) <= 1e-13
    assert approx.real >= 0.7
    assert abs(approx - series) <= weierstrass_tail_bound(0.5j, 200) + 1e-12


def test_weierstrass_improves_with_more_zeros():
    series = bessel_j_log_deriv(0.7, 0.5).real
    coarse = abs(weierstrass_log_deriv(0.7, 0.5, n_zeros=200).real - series)
    fine = abs(weierstrass_log_deriv(0.7, 0.5, n_zeros=400).real - series)
    assert fine < coarse


def test_weierstrass_pole_at_a_zero():
    with pytest.raises(PoleError):
        weierstrass_log_deriv(0.5, bessel_j_zero(0.5, 1).value)


def test_zero_expansion_agrees_with_scipy_zero_table():
    zeros = special.jn_zeros(0, 3)
    for n, expected in enumerate(zeros, start=1):
        assert bessel_j_zero(0, n).value == pytest.approx(expected, abs=1e-12)
