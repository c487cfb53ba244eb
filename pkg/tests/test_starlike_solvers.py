"""Radius and threshold solver tests against the published tables and scipy oracles."""

import math

import numpy as np
import pytest
from scipy import optimize, special

import config
from exceptions import InvalidParameterError, PoleError, UnsupportedParametersError
from models import EquationId, Family, RadiusQuery
from starlike_solvers import (
    a_scale,
    condition_asum,
    nu_tilde,
    radius_f,
    radius_g,
    radius_h,
    solve_radius,
    solve_threshold,
    threshold_nu_f,
    threshold_nu_g,
)
from tables import A_VALUES, BETA_VALUES, TABLE_NU, TABLES
from zeros import bessel_j_zero

CELLS = [
    (table_id, a, beta, spec.reference(a, beta))
    for table_id, spec in TABLES.items()
    for a in A_VALUES
    for beta in BETA_VALUES
]


@pytest.mark.parametrize("table_id, a, beta, published", CELLS)
def test_published_table_cells(table_id, a, beta, published):
    spec = TABLES[table_id]
    if spec.kind == "threshold":
        root = solve_threshold(spec.family, a, beta)
    else:
        root = solve_radius(RadiusQuery(a=a, nu=TABLE_NU, beta=beta, family=spec.family))
    assert abs(root.value - float(published)) <= config.TABLE_TOLERANCE


def test_nu_tilde():
    root = nu_tilde()
    # the order whose first zero j_{ν,1} is 1
    assert root.value == pytest.approx(-0.774564512843962, abs=1e-9)
    assert -0.7746 < root.value <= -0.7745
    assert bessel_j_zero(root.value, 1).value == pytest.approx(1.0, abs=1e-9)
    assert root.equation_id is EquationId.NU_TILDE


def test_a_scale():
    assert a_scale(1) == 1.0
    assert a_scale(2) == pytest.approx(2.0, rel=1e-15)
    assert a_scale(3) == pytest.approx(3.0 * math.sqrt(3.0), rel=1e-15)


def test_condition_asum_examples():
    assert condition_asum(1, -0.5, 0.0) is True
    assert condition_asum(2, 0.0, 0.0) is False
    assert condition_asum(1, 0.5, 0.5) is True
    with pytest.raises(PoleError):
        condition_asum(1, -2.0, 0.0)


def test_radius_f_negative_order_uses_modified_dini():
    root = radius_f(RadiusQuery(a=1, nu=-0.5, beta=0.0, family=Family.F))
    assert root.equation_id is EquationId.RADIUS_F_MODIFIED
    assert root.value == pytest.approx(0.7718, abs=1e-4)
    assert root.value * math.tanh(root.value) == pytest.approx(0.5, abs=1e-12)
    assert root.disk_radius == root.value


@pytest.mark.parametrize(
    "solver, query",
    [
        (radius_f, RadiusQuery(a=2, nu=0.0, beta=0.0, family=Family.F)),
        (radius_f, RadiusQuery(a=2, nu=0.5, beta=0.3, family=Family.F)),
        (radius_g, RadiusQuery(a=3, nu=0.0, beta=0.0, family=Family.G)),
    ],
)
def test_unsupported_parameters_name_the_condition(solver, query):
    with pytest.raises(UnsupportedParametersError) as excinfo:
        solver(query)
    assert excinfo.value.hypothesis
    assert "hypothesis violated" in str(excinfo.value)


@pytest.mark.parametrize("nu", [0.5, 0.7, 0.9])
def test_radius_g_at_a_two_matches_radius_f_at_a_one(nu):
    g = radius_g(RadiusQuery(a=2, nu=nu, beta=0.0, family=Family.G))
    f = radius_f(RadiusQuery(a=1, nu=nu, beta=0.0, family=Family.F))
    assert g.value == pytest.approx(f.value, abs=1e-12)


@pytest.mark.parametrize("family", [Family.F, Family.G, Family.H])
def test_radius_decreases_with_beta(family):
    betas = (0.0, 0.25, 0.5, 0.75, 0.95)
    values = [solve_radius(RadiusQuery(a=1, nu=TABLE_NU, beta=beta, family=family)).value for beta in betas]
    assert all(left > right for left, right in zip(values, values[1:]))


def test_radius_is_not_monotone_in_a():
    values = [solve_radius(RadiusQuery(a=a, nu=TABLE_NU, beta=0.95, family=Family.F)).value for a in A_VALUES]
    assert values[0] < values[1]
    assert values[2] < values[1]


@pytest.mark.parametrize("a, beta", [(1, 0.5), (2, 0.0), (3, 0.95)])
def test_radius_at_the_threshold_order_is_one(a, beta):
    nu = threshold_nu_f(a, beta).value
    root = radius_f(RadiusQuery(a=a, nu=nu, beta=beta, family=Family.F))
    assert root.value == pytest.approx(1.0, abs=1e-6)


def _radius_coefficient(family, a, nu, beta):
    scale = a_scale(a)
    if family is Family.F:
        return (nu - 1.0) * (1.0 - a) * scale + beta * (a * nu - a + 1.0)
    return (nu - 1.0) * (1.0 - a) * scale - a * (1.0 - nu) + beta


@pytest.mark.parametrize("family", [Family.F, Family.G])
@pytest.mark.parametrize("a", A_VALUES)
@pytest.mark.parametrize("beta", BETA_VALUES)
def test_radius_matches_dense_scan(family, a, beta):
    nu = TABLE_NU
    scale = a_scale(a)
    coefficient = _radius_coefficient(family, a, nu, beta)

    def equation(r):
        return r * scale * special.jvp(nu, r) - coefficient * special.jv(nu, r)

    grid = np.arange(1e-4, bessel_j_zero(nu, 1).value, 1e-4)
    values = equation(grid)
    index = int(np.argmax(np.sign(values[1:]) != np.sign(values[:-1])))
    oracle = optimize.brentq(equation, grid[index], grid[index + 1], xtol=1e-14)
    root = solve_radius(RadiusQuery(a=a, nu=nu, beta=beta, family=family))
    assert root.value == pytest.approx(oracle, abs=1e-3)
    assert root.residual <= 1e-10


def test_radius_h_reports_squared_disk_radius():
    root = radius_h(RadiusQuery(a=1, nu=0.7, beta=0.999, family=Family.H))
    assert root.residual <= 1e-10
    assert root.disk_radius == pytest.approx(root.value**2, rel=1e-15)
    assert 0.0 < root.value < 0.2

    wide = radius_h(RadiusQuery(a=2, nu=0.7, beta=0.5, family=Family.H))
    assert wide.value == pytest.approx(1.44678, abs=1e-5)
    assert wide.disk_radius == pytest.approx(wide.value**2, rel=1e-15)
    assert wide.clipped == 1.0
    assert wide.to_dict()["clipped"] == 1.0


def test_solver_rejects_a_query_for_another_family():
    with pytest.raises(InvalidParameterError):
        radius_f(RadiusQuery(a=1, nu=0.7, beta=0.5, family=Family.G))


def test_threshold_validation():
    with pytest.raises(InvalidParameterError):
        solve_threshold("h", 1, 0.5)
    with pytest.raises(InvalidParameterError):
        solve_threshold("f", 1, 1.0)
    with pytest.raises(InvalidParameterError):
        solve_threshold("g", 0, 0.5)


def test_threshold_residual_and_bracket():
    root = solve_threshold(Family.G, 2, 0.5)
    assert root.equation_id is EquationId.THRESHOLD_G
    assert root.bracket_lo <= root.value <= root.bracket_hi
    assert root.residual <= 1e-10
    assert root.value > max(nu_tilde().value, -0.5)


def test_threshold_g_at_a_two_reduces_to_threshold_f_at_a_one():
    g = threshold_nu_g(2, 0.0)
    f = threshold_nu_f(1, 0.0)
    assert g.value == pytest.approx(f.value, abs=1e-12)
    assert g.value == pytest.approx(0.39001, abs=config.TABLE_TOLERANCE)
    # νJ_ν(1) = J_{ν+1}(1)
    assert g.value * special.jv(g.value, 1.0) == pytest.approx(special.jv(g.value + 1.0, 1.0), abs=1e-12)
