"""Power-series evaluation of Γ, J_ν, I_ν and the generalized Bessel function ₐB_{b,p,c}."""

from __future__ import annotations

import cmath
import logging
import math
from typing import Union

import numpy as np
from scipy import special

from exceptions import (
    BranchCutError,
    GammaOverflowError,
    InvalidParameterError,
    PoleError,
    SeriesConvergenceError,
)
from models import GBesselParams, SeriesConfig, SeriesEvaluation, SeriesSum

logger = logging.getLogger(__name__)

# Γ(x) leaves the double range just above this argument.
GAMMA_MAX_ARG = 171.6243769563027

DEFAULT_CONFIG = SeriesConfig()

Scalar = Union[int, float, complex]


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and float(x).is_integer()


def _as_complex(z: Scalar) -> complex:
    value = complex(z)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise InvalidParameterError(f"argument must be finite, got {z!r}")
    return value


# ----------------------------------------------------------------------
# Gamma and principal powers
# ----------------------------------------------------------------------


def gamma_fn(x: float) -> float:
    """Γ(x) for real x, with reflection below 1/2."""
    x = float(x)
    if not math.isfinite(x):
        raise InvalidParameterError(f"Γ needs a finite argument, got {x!r}")
    if _is_nonpositive_integer(x):
        raise PoleError(f"Γ has a pole at {x:g}")
    if x > GAMMA_MAX_ARG:
        raise GammaOverflowError(f"Γ({x:g}) overflows double precision")
    if x >= 0.5:
        return float(special.gamma(x))

    # Γ(x)Γ(1−x) = π / sin(πx); sin is evaluated on x mod 2 to keep πx small.
    reduced = x - 2.0 * math.floor(x / 2.0)
    sine = math.sin(math.pi * reduced)
    reflected = 1.0 - x
    if reflected > GAMMA_MAX_ARG:
        return math.copysign(0.0, sine)
    return math.pi / (sine * float(special.gamma(reflected)))


def principal_power(w: Scalar, p: float) -> complex:
    """w**p on the principal branch exp(p·Log w)."""
    w = complex(w)
    p = float(p)
    if p.is_integer():
        if w == 0 and p < 0:
            raise PoleError(f"0 raised to the negative power {p:g}")
        return w ** int(p)
    if w == 0:
        if p > 0:
            return 0j
        raise PoleError(f"0 raised to the negative power {p:g}")
    if w.imag == 0.0:
        if w.real < 0.0:
            raise BranchCutError(f"non-integer power {p:g} of a negative real number {w.real:g}")
        return complex(w.real ** p)
    return cmath.exp(p * cmath.log(w))


# ----------------------------------------------------------------------
# Regularized series
# ----------------------------------------------------------------------


def _ratio_denominator(a: int, s: float, k: int) -> float:
    """(k+1)·∏_{m<a}(ak+s+m), the divisor taking term k to term k+1."""
    product = float(k + 1)
    base = a * k + s
    for m in range(a):
        product *= base + m
    return product


def _scalar_sums(params: GBesselParams, w: complex, cfg: SeriesConfig) -> SeriesSum:
    a, s, factor = params.a, params.s, -params.c * w
    term = complex(1.0 / gamma_fn(s))
    total = term
    weighted = 0j
    previous = abs(term)
    for k in range(cfg.max_terms - 1):
        term = term * factor / _ratio_denominator(a, s, k)
        total += term
        weighted += (k + 1) * term
        magnitude = abs(term)
        if magnitude <= cfg.rel_tol * abs(total) and magnitude <= previous:
            return SeriesSum(total=total, weighted=weighted, terms=k + 2, last_term=magnitude)
        previous = magnitude
    raise SeriesConvergenceError(
        f"series for {params} at w={w} did not converge in {cfg.max_terms} terms",
        terms=cfg.max_terms,
        last_term=previous,
    )


def _array_sums(params: GBesselParams, w: np.ndarray, cfg: SeriesConfig) -> SeriesSum:
    a, s = params.a, params.s
    factor = -params.c * w
    term = np.full(w.shape, 1.0 / gamma_fn(s), dtype=complex)
    total = term.copy()
    weighted = np.zeros_like(term)
    previous = np.abs(term)
    for k in range(cfg.max_terms - 1):
        term = term * factor / _ratio_denominator(a, s, k)
        total += term
        weighted += (k + 1) * term
        magnitude = np.abs(term)
        done = (magnitude <= cfg.rel_tol * np.abs(total)) & (magnitude <= previous)
        if done.all():
            return SeriesSum(total=total, weighted=weighted, terms=k + 2, last_term=float(magnitude.max()))
        previous = magnitude
    raise SeriesConvergenceError(
        f"vectorized series for {params} did not converge in {cfg.max_terms} terms",
        terms=cfg.max_terms,
        last_term=float(previous.max()),
    )


def regularized_series(params: GBesselParams, w, cfg: SeriesConfig = DEFAULT_CONFIG) -> SeriesSum:
    """Sums S = Σ c_k w^k and D = Σ k c_k w^k, c_k = (−c)^k/(k! Γ(ak+s)).

    With w = (z/2)² the generalized function is (z/2)^p · S, so S carries no
    branch cut. Scalars are summed in plain Python; arrays share one stopping
    index chosen so that every element meets the truncation criterion.
    """
    if _is_nonpositive_integer(params.s):
        raise PoleError(f"gamma argument {params.s:g} is a pole for {params}")
    if np.ndim(w) == 0:
        return _scalar_sums(params, complex(w), cfg)
    return _array_sums(params, np.asarray(w, dtype=complex), cfg)


# ----------------------------------------------------------------------
# Public API
# ----------------------------------------------------------------------


def _value_at_origin(params: GBesselParams) -> complex:
    if _is_nonpositive_integer(params.s):
        raise PoleError(f"gamma argument {params.s:g} is a pole for {params}")
    if params.p == 0.0:
        return complex(1.0 / gamma_fn(params.s))
    if params.p > 0.0:
        return 0j
    raise PoleError(f"(z/2)^p is singular at z=0 for p={params.p:g}")


def _derivative_at_origin(params: GBesselParams) -> complex:
    if _is_nonpositive_integer(params.s):
        raise PoleError(f"gamma argument {params.s:g} is a pole for {params}")
    if params.p == 1.0:
        return complex(0.5 / gamma_fn(params.s))
    if params.p == 0.0 or params.p > 1.0:
        return 0j
    raise PoleError(f"derivative is unbounded at z=0 for p={params.p:g}")


def series_diagnostics(
    params: GBesselParams, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG
) -> SeriesEvaluation:
    """ₐB_{b,p,c}(z) with the number of terms used and the last term's magnitude."""
    z = _as_complex(z)
    if z == 0:
        return SeriesEvaluation(value=_value_at_origin(params), terms=1, last_term=0.0)
    prefactor = principal_power(z / 2.0, params.p)
    sums = regularized_series(params, (z / 2.0) ** 2, cfg)
    logger.debug("series %s at z=%s used %d terms", params, z, sums.terms)
    return SeriesEvaluation(
        value=prefactor * sums.total,
        terms=sums.terms,
        last_term=abs(prefactor) * sums.last_term,
    )


def eval_gbessel(params: GBesselParams, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Σ_k (−c)^k/(k! Γ(ak+p+(b+1)/2)) (z/2)^{2k+p} on the principal branch."""
    return series_diagnostics(params, z, cfg).value


def eval_gbessel_deriv(params: GBesselParams, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Term-wise derivative (z/2)^p (pS + 2D)/z."""
    z = _as_complex(z)
    if z == 0:
        return _derivative_at_origin(params)
    prefactor = principal_power(z / 2.0, params.p)
    sums = regularized_series(params, (z / 2.0) ** 2, cfg)
    return prefactor * (params.p * sums.total + 2.0 * sums.weighted) / z


def gbessel_log_deriv(params: GBesselParams, z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """z B'(z)/B(z) = p + 2D/S; accepts a scalar or a numpy array of arguments."""
    if np.ndim(z) > 0:
        z_values = np.asarray(z, dtype=complex)
        sums = regularized_series(params, (z_values / 2.0) ** 2, cfg)
        if np.any(sums.total == 0):
            raise PoleError("log-derivative requested at a zero of the series")
        return params.p + 2.0 * sums.weighted / sums.total

    z = _as_complex(z)
    if z == 0:
        if _is_nonpositive_integer(params.s):
            raise PoleError(f"gamma argument {params.s:g} is a pole for {params}")
        return complex(params.p)
    sums = regularized_series(params, (z / 2.0) ** 2, cfg)
    if sums.total == 0:
        raise PoleError(f"log-derivative requested at a zero z={z}")
    return params.p + 2.0 * sums.weighted / sums.total


def eval_bessel_j(nu: float, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """J_ν(z) from its power series."""
    return eval_gbessel(GBesselParams.bessel_j(nu), z, cfg)


def eval_bessel_i(nu: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """I_ν(x) for real x ≥ 0."""
    x = float(x)
    if x < 0.0:
        raise InvalidParameterError(f"I_ν is evaluated for x ≥ 0 only, got {x!r}")
    if not nu > -1.0:
        raise InvalidParameterError(f"I_ν needs ν > −1, got {nu!r}")
    return eval_gbessel(GBesselParams.bessel_i(nu), x, cfg).real


def eval_bessel_j_deriv(nu: float, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """J'_ν(z) = J_{ν−1}(z) − (ν/z) J_ν(z); the series derivative at z=0."""
    z = _as_complex(z)
    if z == 0:
        return eval_gbessel_deriv(GBesselParams.bessel_j(nu), z, cfg)
    if nu == 0.0:
        return -eval_bessel_j(1.0, z, cfg)
    return eval_bessel_j(nu - 1.0, z, cfg) - (nu / z) * eval_bessel_j(nu, z, cfg)


def bessel_j_log_deriv(nu: float, z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """z J'_ν(z)/J_ν(z) without a branch cut."""
    return gbessel_log_deriv(GBesselParams.bessel_j(nu), z, cfg)


def bessel_i_log_deriv(nu: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """x I'_ν(x)/I_ν(x) for x ≥ 0."""
    if float(x) < 0.0:
        raise InvalidParameterError(f"I_ν is evaluated for x ≥ 0 only, got {x!r}")
    return gbessel_log_deriv(GBesselParams.bessel_i(nu), float(x), cfg).real
