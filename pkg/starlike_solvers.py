"""Radius-of-starlikeness and starlikeness-threshold solvers for the families f, g and h."""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Callable, Union

import config
from bessel_core import DEFAULT_CONFIG, eval_bessel_j
from exceptions import InvalidParameterError, PoleError, UnsupportedParametersError
from models import DiniSpec, EquationId, Family, RadiusQuery, RootResult, SeriesConfig
from rootfinding import Bracket, bisect, first_sign_change, geometric_points, sign
from zeros import bessel_j_value_and_slope, bessel_j_zero, modified_dini_root, smallest_dini_root_below

logger = logging.getLogger(__name__)

# ν̃ lies inside this interval: j_{−0.99,1} < 1 < j_{0,1}.
NU_TILDE_BRACKET = (-0.99, 0.0)
NU_TILDE_WIDTH = 1e-12


def a_scale(a: int) -> float:
    """a^{a/2} as exp((a/2)·ln a), the positive real branch."""
    return math.exp(0.5 * a * math.log(a))


def _check_beta(beta: float) -> None:
    if not 0.0 <= beta < 1.0:
        raise InvalidParameterError(f"β must lie in [0, 1), got {beta!r}")


def _check_a(a: int) -> None:
    if isinstance(a, bool) or int(a) != a or a < 1:
        raise InvalidParameterError(f"a must be a positive integer, got {a!r}")


def _expect(query: RadiusQuery, family: Family) -> RadiusQuery:
    if query.family is not family:
        raise InvalidParameterError(f"query for family {query.family.value} sent to the {family.value} solver")
    return query


def _smallest_bessel_root(
    query: RadiusQuery, coefficient: float, equation_id: EquationId, cfg: SeriesConfig
) -> RootResult:
    """Smallest positive root of r a^{a/2} J'_ν(r) − C J_ν(r), searched on (0, j_{ν,1}]."""
    scale = a_scale(query.a)
    spec = DiniSpec(nu=query.nu, alpha=-coefficient / scale)
    upper = bessel_j_zero(query.nu, 1).value
    root = smallest_dini_root_below(spec, upper, cfg, equation_id)
    value, slope = bessel_j_value_and_slope(query.nu, root.value, cfg)
    disk_radius = root.value**2 if query.family is Family.H else root.value
    logger.debug("%s root for a=%d ν=%g β=%g: %.15g", equation_id.value, query.a, query.nu, query.beta, root.value)
    return RootResult(
        value=root.value,
        residual=abs(root.value * scale * slope - coefficient * value),
        bracket_lo=root.bracket_lo,
        bracket_hi=root.bracket_hi,
        iterations=root.iterations,
        equation_id=equation_id,
        disk_radius=disk_radius,
    )


# ----------------------------------------------------------------------
# Radii
# ----------------------------------------------------------------------


def condition_asum(a: int, nu: float, beta: float) -> bool:
    """(aν−a+1)(a^{a/2}−β) / (2a^{a/2} + (aν−a+1)(a^{a/2}−β)) > −1."""
    scale = a_scale(a)
    numerator = (a * nu - a + 1.0) * (scale - beta)
    denominator = 2.0 * scale + numerator
    if denominator == 0.0:
        raise PoleError(f"condition denominator vanishes at a={a}, ν={nu:g}, β={beta:g}")
    return numerator / denominator > -1.0


def radius_f(query: RadiusQuery, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    """Radius of starlikeness of order β for f_{a,ν}."""
    query = _expect(query, Family.F)
    a, nu, beta = query.a, query.nu, query.beta
    scale = a_scale(a)
    order = a * nu - a + 1.0
    coefficient = (nu - 1.0) * (1.0 - a) * scale + beta * order

    if order > 0.0:
        return _smallest_bessel_root(query, coefficient, EquationId.RADIUS_F, cfg)
    if order == 0.0:
        raise UnsupportedParametersError("ν ≠ (a−1)/a", "f_{a,ν} is undefined when aν−a+1 = 0")
    if not condition_asum(a, nu, beta):
        raise UnsupportedParametersError(
            "(aν−a+1)(a^{a/2}−β) / (2a^{a/2} + (aν−a+1)(a^{a/2}−β)) > −1",
            f"fails for a={a}, ν={nu:g}, β={beta:g}",
        )

    # r a^{a/2} I' − C I = a^{a/2} (r I' + α I)
    alpha = -((nu - 1.0) * (1.0 - a) + beta * order / scale)
    root = modified_dini_root(nu, alpha, cfg)
    return RootResult(
        value=root.value,
        residual=scale * root.residual,
        bracket_lo=root.bracket_lo,
        bracket_hi=root.bracket_hi,
        iterations=root.iterations,
        equation_id=EquationId.RADIUS_F_MODIFIED,
        disk_radius=root.value,
    )


def radius_g(query: RadiusQuery, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    """Radius of starlikeness of order β for g_{a,ν}."""
    query = _expect(query, Family.G)
    a, nu, beta = query.a, query.nu, query.beta
    scale = a_scale(a)
    if a * (nu - 1.0) * (scale - 1.0) + scale - beta < 0.0:
        raise UnsupportedParametersError(
            "a(ν−1)(a^{a/2}−1) + a^{a/2} − β ≥ 0", f"fails for a={a}, ν={nu:g}, β={beta:g}"
        )
    coefficient = (nu - 1.0) * (1.0 - a) * scale - a * (1.0 - nu) + beta
    return _smallest_bessel_root(query, coefficient, EquationId.RADIUS_G, cfg)


def radius_h(query: RadiusQuery, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    """Radius of starlikeness of order β for h_{a,ν}.

    The equation is written in the variable √z, so the z-plane radius is the
    square of the root (reported as disk_radius).
    """
    query = _expect(query, Family.H)
    a, nu, beta = query.a, query.nu, query.beta
    scale = a_scale(a)
    order = a * nu - a + 1.0
    if not (scale - 1.0) * order + 2.0 * (1.0 - beta) > 0.0:
        raise UnsupportedParametersError(
            "(a^{a/2}−1)(1−a+aν) + 2(1−β) > 0", f"fails for a={a}, ν={nu:g}, β={beta:g}"
        )
    coefficient = -((scale - 1.0) * order - scale * nu + 2.0 * (1.0 - beta))
    return _smallest_bessel_root(query, coefficient, EquationId.RADIUS_H, cfg)


RADIUS_SOLVERS = {Family.F: radius_f, Family.G: radius_g, Family.H: radius_h}


def solve_radius(query: RadiusQuery, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    """Dispatch on the query's family."""
    return RADIUS_SOLVERS[query.family](query, cfg)


# ----------------------------------------------------------------------
# Thresholds in the order ν
# ----------------------------------------------------------------------


@lru_cache(maxsize=1)
def nu_tilde() -> RootResult:
    """The order ν̃ ∈ (−1, 0) with j_{ν̃,1} = 1."""

    def excess(nu: float) -> float:
        return bessel_j_zero(nu, 1).value - 1.0

    lo, hi = NU_TILDE_BRACKET
    refined, iterations = bisect(excess, Bracket(lo=lo, hi=hi, sign_lo=-1), width=NU_TILDE_WIDTH)
    value = refined.midpoint
    logger.info("ν̃ = %.12g after %d bisections", value, iterations)
    return RootResult(
        value=value,
        residual=abs(excess(value)),
        bracket_lo=lo,
        bracket_hi=hi,
        iterations=iterations,
        equation_id=EquationId.NU_TILDE,
    )


def _bessel_ratio_at_one(nu: float, cfg: SeriesConfig) -> float:
    """J_{ν+1}(1)/J_ν(1); J_ν(1) > 0 on every threshold domain."""
    return eval_bessel_j(nu + 1.0, 1.0, cfg).real / eval_bessel_j(nu, 1.0, cfg).real


def _solve_threshold(
    scaled: Callable[[float], float], lower: float, equation_id: EquationId, label: str
) -> RootResult:
    """Scan upward from just above `lower` with growing steps, then bisect.

    `scaled` is the threshold function divided by J_ν(1), which keeps its
    magnitude independent of how small J_ν(1) becomes for large ν.
    """
    start = lower + config.THRESHOLD_OFFSET
    start_sign = sign(scaled(start))
    bracket = first_sign_change(
        scaled,
        geometric_points(start, config.THRESHOLD_INITIAL_STEP, config.THRESHOLD_STEP_GROWTH, config.THRESHOLD_MAX_NU),
        start,
        start_sign,
        label=label,
    )
    refined, iterations = bisect(scaled, bracket)
    value = refined.midpoint
    logger.debug("%s converged to %.15g in bracket [%.6g, %.6g]", label, value, bracket.lo, bracket.hi)
    return RootResult(
        value=value,
        residual=abs(scaled(value)),
        bracket_lo=bracket.lo,
        bracket_hi=bracket.hi,
        iterations=bracket.evaluations + iterations,
        equation_id=equation_id,
    )


def threshold_nu_f(a: int, beta: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    """ν_f(a, β): root of (aν−a+1)(a^{a/2}−β)J_ν(1) − a^{a/2}J_{ν+1}(1) on ((a−1)/a, ∞)."""
    _check_a(a)
    _check_beta(beta)
    scale = a_scale(a)

    def scaled(nu: float) -> float:
        return (a * nu - a + 1.0) * (scale - beta) - scale * _bessel_ratio_at_one(nu, cfg)

    return _solve_threshold(scaled, (a - 1.0) / a, EquationId.THRESHOLD_F, f"threshold f (a={a}, β={beta:g})")


def threshold_nu_g(a: int, beta: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    """ν_g(a, β): root of (a(ν−1)(a^{a/2}−1) + a^{a/2} − β)J_ν(1) − a^{a/2}J_{ν+1}(1) above max(ν̃, −1/a)."""
    _check_a(a)
    _check_beta(beta)
    scale = a_scale(a)

    def scaled(nu: float) -> float:
        return a * (nu - 1.0) * (scale - 1.0) + scale - beta - scale * _bessel_ratio_at_one(nu, cfg)

    lower = max(nu_tilde().value, -1.0 / a)
    return _solve_threshold(scaled, lower, EquationId.THRESHOLD_G, f"threshold g (a={a}, β={beta:g})")


THRESHOLD_SOLVERS = {Family.F: threshold_nu_f, Family.G: threshold_nu_g}


def solve_threshold(family: Union[Family, str], a: int, beta: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    family = Family.parse(family)
    if family not in THRESHOLD_SOLVERS:
        raise InvalidParameterError("thresholds exist for the families f and g only")
    return THRESHOLD_SOLVERS[family](a, beta, cfg)
