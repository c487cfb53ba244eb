"""Zeros of J_ν, of Dini functions and of the generalized Bessel series."""

from __future__ import annotations

import itertools
import logging
import math
from functools import lru_cache
from typing import Iterator, Tuple

from scipy import special

import config
from bessel_core import (
    DEFAULT_CONFIG,
    bessel_i_log_deriv,
    eval_bessel_i,
    eval_bessel_j,
    eval_bessel_j_deriv,
    regularized_series,
)
from exceptions import InvalidParameterError
from models import BesselZero, DiniSpec, EquationId, GBesselParams, RootResult, SeriesConfig
from rootfinding import bisect, first_sign_change, geometric_points, newton_bisection, newton_polish, sign

logger = logging.getLogger(__name__)

# The modified Dini walk doubles its step from 1; rI'/I grows like r − 1/2, so the
# root sits near 1/2 − α and the walk stops well past it.
MODIFIED_MIN_LIMIT = 64.0
GBESSEL_ZERO_STEP = 0.05


def _check_order(nu: float) -> None:
    if not nu > -1.0:
        raise InvalidParameterError(f"Bessel order must exceed −1, got ν={nu!r}")


def _uniform_points(start: float, step: float, limit: float) -> Iterator[float]:
    for k in itertools.count(1):
        x = start + k * step
        if x > limit:
            return
        yield x


# ----------------------------------------------------------------------
# Real-axis evaluation
# ----------------------------------------------------------------------


def bessel_j_value(nu: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """J_ν(x) for x > 0: the series up to SERIES_RADIUS, scipy beyond."""
    if x <= config.SERIES_RADIUS:
        return eval_bessel_j(nu, x, cfg).real
    return float(special.jv(nu, x))


def bessel_j_value_and_slope(nu: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> Tuple[float, float]:
    """J_ν(x) and J'_ν(x) for x > 0."""
    if x <= config.SERIES_RADIUS:
        return eval_bessel_j(nu, x, cfg).real, eval_bessel_j_deriv(nu, x, cfg).real
    return float(special.jv(nu, x)), float(special.jvp(nu, x))


def bessel_i_scaled_value(nu: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """I_ν(x) up to SERIES_RADIUS, e^{−x}I_ν(x) beyond."""
    if x <= config.SERIES_RADIUS:
        return eval_bessel_i(nu, x, cfg)
    return float(special.ive(nu, x))


def bessel_i_ratio(nu: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """xI'_ν(x)/I_ν(x) for x ≥ 0: the series up to SERIES_RADIUS, scaled scipy values beyond."""
    if x <= config.SERIES_RADIUS:
        return bessel_i_log_deriv(nu, x, cfg)
    # xI'_ν = xI_{ν+1} + νI_ν
    return nu + x * float(special.ive(nu + 1.0, x)) / float(special.ive(nu, x))


def mcmahon_guess(nu: float, n: int) -> float:
    """Large-n expansion of j_{ν,n}; used only as a starting point."""
    beta = (n + nu / 2.0 - 0.25) * math.pi
    mu = 4.0 * nu * nu
    eight_beta = 8.0 * beta
    return beta - (mu - 1.0) / eight_beta - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * eight_beta**3)


# ----------------------------------------------------------------------
# Zeros of J_ν
# ----------------------------------------------------------------------


@lru_cache(maxsize=512)
def _scan_bessel_zeros(nu: float, count: int) -> Tuple[RootResult, ...]:
    horizon = (count + abs(nu) / 2.0 + 1.0) * math.pi + 5.0
    start, sign_start = 0.0, 1  # J_ν(0⁺) > 0 for ν > −1
    found = []
    while len(found) < count:
        n = len(found) + 1
        bracket = first_sign_change(
            lambda x: bessel_j_value(nu, x),
            _uniform_points(start, config.ZERO_SCAN_STEP, horizon),
            start,
            sign_start,
            label=f"J_{nu:g}",
        )
        value, _, iterations = newton_bisection(
            lambda x: bessel_j_value_and_slope(nu, x),
            bracket,
            x0=mcmahon_guess(nu, n),
        )
        found.append(
            RootResult(
                value=value,
                residual=abs(bessel_j_value(nu, value)),
                bracket_lo=bracket.lo,
                bracket_hi=bracket.hi,
                iterations=iterations + bracket.evaluations,
                equation_id=EquationId.BESSEL_ZERO,
            )
        )
        start, sign_start = bracket.hi, -bracket.sign_lo
    logger.debug("computed %d zeros of J_%g, largest %.12g", count, nu, found[-1].value)
    return tuple(found)


def bessel_j_zeros(nu: float, count: int) -> Tuple[float, ...]:
    """The first `count` positive zeros of J_ν."""
    _check_order(nu)
    if int(count) != count or count < 1:
        raise InvalidParameterError(f"zero count must be a positive integer, got {count!r}")
    return tuple(root.value for root in _scan_bessel_zeros(float(nu), int(count)))


def bessel_j_zero(nu: float, n: int) -> BesselZero:
    """The n-th positive zero j_{ν,n}."""
    _check_order(nu)
    if int(n) != n or n < 1:
        raise InvalidParameterError(f"zero index must be a positive integer, got {n!r}")
    return BesselZero(nu=float(nu), n=int(n), value=_scan_bessel_zeros(float(nu), int(n))[-1].value)


# ----------------------------------------------------------------------
# Dini functions αJ_ν(x) + γxJ'_ν(x)
# ----------------------------------------------------------------------


def dini_function(spec: DiniSpec, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    value, slope = bessel_j_value_and_slope(spec.nu, x, cfg)
    return spec.alpha * value + spec.gamma_coef * x * slope


def _dini_value_and_slope(spec: DiniSpec, x: float, cfg: SeriesConfig) -> Tuple[float, float]:
    # x J'' = −J' − (x − ν²/x) J
    value, slope = bessel_j_value_and_slope(spec.nu, x, cfg)
    dini = spec.alpha * value + spec.gamma_coef * x * slope
    dini_slope = spec.alpha * slope - spec.gamma_coef * (x - spec.nu**2 / x) * value
    return dini, dini_slope


def dini_sign_at_origin(spec: DiniSpec) -> int:
    """Sign of the Dini function on (0, ε); J_ν(0⁺) > 0."""
    leading = spec.alpha + spec.gamma_coef * spec.nu
    if leading != 0.0:
        return sign(leading)
    # α = −γν leaves −γ x J_{ν+1}(x)
    return -sign(spec.gamma_coef)


def smallest_dini_root_below(
    spec: DiniSpec,
    upper: float,
    cfg: SeriesConfig = DEFAULT_CONFIG,
    equation_id: EquationId = EquationId.DINI,
) -> RootResult:
    """First sign change of the Dini function on (0, upper], refined to ROOT_WIDTH."""
    step = upper / config.DINI_SCAN_STEPS
    points = [k * step for k in range(1, config.DINI_SCAN_STEPS)] + [upper]
    bracket = first_sign_change(
        lambda x: dini_function(spec, x, cfg),
        points,
        0.0,
        dini_sign_at_origin(spec),
        label=f"Dini function (ν={spec.nu:g}, α={spec.alpha:g})",
    )
    refined, iterations = bisect(lambda x: dini_function(spec, x, cfg), bracket)
    value, polished = newton_polish(
        lambda x: _dini_value_and_slope(spec, x, cfg), refined.midpoint, refined.lo, refined.hi
    )
    logger.debug("Dini root ν=%g α=%g at %.15g", spec.nu, spec.alpha, value)
    return RootResult(
        value=value,
        residual=abs(dini_function(spec, value, cfg)),
        bracket_lo=bracket.lo,
        bracket_hi=bracket.hi,
        iterations=bracket.evaluations + iterations + polished,
        equation_id=equation_id,
    )


def dini_smallest_positive_root(spec: DiniSpec, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    """Smallest positive root of αJ_ν(x) + γxJ'_ν(x), searched below j_{ν,1}."""
    if spec.gamma_coef == 0.0:
        if spec.alpha == 0.0:
            raise InvalidParameterError("Dini function with α = γ = 0 vanishes identically")
        return _scan_bessel_zeros(spec.nu, 1)[0]
    if not spec.alpha / spec.gamma_coef + spec.nu > 0.0:
        raise InvalidParameterError(
            f"ν + α must be positive (got {spec.nu + spec.alpha / spec.gamma_coef:.6g}); "
            "use modified_dini_root for the imaginary zeros"
        )
    upper = bessel_j_zero(spec.nu, 1).value
    return smallest_dini_root_below(spec, upper, cfg)


def dini_imaginary_zero_bound(spec: DiniSpec) -> float:
    """Upper bound √(−(α+ν)/(2+α+ν))·j_{ν,1} for ζ where ±iζ are the imaginary Dini zeros."""
    if spec.gamma_coef == 0.0:
        raise InvalidParameterError("the imaginary-zero bound needs γ ≠ 0")
    alpha = spec.alpha / spec.gamma_coef
    if not -1.0 < spec.nu < -alpha:
        raise InvalidParameterError(f"bound requires −1 < ν < −α, got ν={spec.nu:g}, α={alpha:g}")
    denominator = 2.0 + alpha + spec.nu
    if denominator <= 0.0:
        raise InvalidParameterError(f"bound undefined: 2 + α + ν = {denominator:g} ≤ 0")
    return math.sqrt(-(alpha + spec.nu) / denominator) * bessel_j_zero(spec.nu, 1).value


def modified_dini_root(nu: float, alpha: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    """The unique positive root of rI'_ν(r) + αI_ν(r) = 0 when −1 < ν < −α."""
    if not -1.0 < nu < -alpha:
        raise InvalidParameterError(f"modified Dini root requires −1 < ν < −α, got ν={nu:g}, α={alpha:g}")

    def q(r: float) -> float:
        return bessel_i_ratio(nu, r, cfg) + alpha

    def q_and_slope(r: float) -> Tuple[float, float]:
        # (rI'/I)' = r + ν²/r − (rI'/I)²/r
        ratio = bessel_i_ratio(nu, r, cfg)
        return ratio + alpha, r + nu * nu / r - ratio * ratio / r

    # q(0⁺) = ν + α < 0 and q increases
    limit = max(MODIFIED_MIN_LIMIT, 4.0 * (1.0 - alpha))
    bracket = first_sign_change(q, geometric_points(0.0, 1.0, 2.0, limit), 0.0, -1, label="rI'/I + α")
    refined, iterations = bisect(q, bracket)
    value, polished = newton_polish(q_and_slope, refined.midpoint, refined.lo, refined.hi)
    # measured against e^{−r}I_ν(r) past SERIES_RADIUS
    residual = abs(bessel_i_scaled_value(nu, value, cfg) * q(value))
    return RootResult(
        value=value,
        residual=residual,
        bracket_lo=bracket.lo,
        bracket_hi=bracket.hi,
        iterations=bracket.evaluations + iterations + polished,
        equation_id=EquationId.MODIFIED_DINI,
    )


# ----------------------------------------------------------------------
# Zeros of the generalized Bessel function
# ----------------------------------------------------------------------


@lru_cache(maxsize=256)
def gbessel_smallest_positive_zero(a: int, nu: float) -> float:
    """min_j j_{ν−1+j/a,1}, the smallest zero of the factors J_{ν−1+j/a}."""
    if int(a) != a or a < 1:
        raise InvalidParameterError(f"a must be a positive integer, got {a!r}")
    if not nu > (a - 1.0) / a:
        raise InvalidParameterError(f"requires ν > (a−1)/a = {(a - 1.0) / a:.6g}, got {nu!r}")
    return min(bessel_j_zero(nu - 1.0 + j / a, 1).value for j in range(1, int(a) + 1))


def gbessel_first_real_zero(a: int, nu: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> RootResult:
    """Smallest x > 0 with ₐB_{2a−1,aν−a+1,1}(a^{a/2} x) = 0, from the series itself."""
    params = GBesselParams.normalized(a, nu)
    if not nu > -1.0 / a:
        raise InvalidParameterError(f"requires ν > −1/a, got {nu!r}")
    scale = math.exp(0.5 * a * math.log(a))

    def inner(x: float) -> float:
        return regularized_series(params, (scale * x / 2.0) ** 2, cfg).total.real

    horizon = 2.0 * abs(nu) + 12.0
    bracket = first_sign_change(
        inner, _uniform_points(0.0, GBESSEL_ZERO_STEP, horizon), 0.0, 1, label=f"{a}B series"
    )
    refined, iterations = bisect(inner, bracket)
    value = refined.midpoint
    return RootResult(
        value=value,
        residual=abs(inner(value)),
        bracket_lo=bracket.lo,
        bracket_hi=bracket.hi,
        iterations=bracket.evaluations + iterations,
        equation_id=EquationId.GBESSEL_ZERO,
    )
