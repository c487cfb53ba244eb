"""Structural identities of ₐB_{b,p,c}: product form, recurrences and log-derivatives."""

from __future__ import annotations

import logging
import math
from typing import Callable, Dict, Tuple

import numpy as np

from bessel_core import (
    DEFAULT_CONFIG,
    Scalar,
    bessel_j_log_deriv,
    eval_gbessel,
    eval_gbessel_deriv,
    gbessel_log_deriv,
    principal_power,
    regularized_series,
)
from exceptions import BranchCutError, InvalidParameterError, PoleError
from models import GBesselParams, SeriesConfig
from zeros import bessel_j_zeros

logger = logging.getLogger(__name__)

# Exponent e of the constant (2π)^e in front of the product form.
PREFACTOR_EXPONENTS: Dict[str, Callable[[int], float]] = {
    "(a-1)/2": lambda a: (a - 1) / 2.0,
    "(a-1)/a": lambda a: (a - 1) / float(a),
}
PREFACTOR_EXPONENT = "(a-1)/2"

DEFAULT_WEIERSTRASS_ZEROS = 200


def _nonzero_complex(z: Scalar) -> complex:
    z = complex(z)
    if z == 0:
        raise InvalidParameterError("identity residuals are evaluated at z ≠ 0")
    return z


def _scale(a: int) -> float:
    """a^{a/2} on the positive real branch."""
    return math.exp(0.5 * a * math.log(a))


# ----------------------------------------------------------------------
# Product form
# ----------------------------------------------------------------------


def eval_gbessel_via_product(
    params: GBesselParams,
    z: Scalar,
    cfg: SeriesConfig = DEFAULT_CONFIG,
    exponent: str = PREFACTOR_EXPONENT,
) -> complex:
    """(2π)^e a^{−p−b/2} (z/2)^p ∏_j (w/2)^{−p_j} B_{(b+1−a)/a, p_j, c}(w), w = z/a^{a/2}.

    Each factor (w/2)^{−p_j} B(w) is summed as its regularized series, so the
    factors contribute no branch of their own.
    """
    if exponent not in PREFACTOR_EXPONENTS:
        raise InvalidParameterError(f"unknown prefactor exponent {exponent!r}")
    z = complex(z)
    if z.imag == 0.0 and z.real < 0.0:
        raise BranchCutError(f"product form is defined off the negative real axis, got z={z}")
    a, b, p, c = params.a, params.b, params.p, params.c
    orders = [(p + j - 1.0) / a for j in range(1, a + 1)]
    if min(orders) <= -1.0:
        raise InvalidParameterError(f"factor orders {orders} must exceed −1")

    half_w = z / (2.0 * _scale(a))
    factor_b = (b + 1.0 - a) / a
    product = 1.0 + 0j
    for order in orders:
        product *= regularized_series(GBesselParams(a=1, b=factor_b, p=order, c=c), half_w**2, cfg).total
    constant = (2.0 * math.pi) ** PREFACTOR_EXPONENTS[exponent](a) * a ** (-p - b / 2.0)
    return constant * principal_power(z / 2.0, p) * product


def product_prefactor_residuals(
    params: GBesselParams, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG
) -> Dict[str, float]:
    """Relative residual of the product form at c = 0 for each candidate exponent.

    With c = 0 only the k = 0 terms survive and the identity reduces to Gauss's
    multiplication formula, which fixes the constant exactly.
    """
    monomial = GBesselParams(a=params.a, b=params.b, p=params.p, c=0.0)
    direct = eval_gbessel(monomial, z, cfg)
    if direct == 0:
        raise PoleError("relative residual undefined where the series vanishes")
    return {
        name: abs(eval_gbessel_via_product(monomial, z, cfg, exponent=name) - direct) / abs(direct)
        for name in PREFACTOR_EXPONENTS
    }


def resolve_prefactor_exponent(
    params: GBesselParams, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG, tol: float = 1e-12
) -> str:
    """The candidate exponent whose product form is exact to `tol`."""
    residuals = product_prefactor_residuals(params, z, cfg)
    exact = [name for name, residual in residuals.items() if residual <= tol]
    logger.info("product prefactor residuals for a=%d: %s", params.a, residuals)
    if not exact:
        raise ArithmeticError(f"no prefactor exponent reproduces the series: {residuals}")
    return min(exact, key=residuals.get)


# ----------------------------------------------------------------------
# Recurrences
# ----------------------------------------------------------------------


def recurrence_residuals(
    params: GBesselParams, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG
) -> Tuple[float, float, float]:
    """Residuals of the three recurrences, each divided by max(1, |B_p(z)|).

    (i)   zB' = pB_p − c(z/2)^{1−a} z B_{p+a}
    (ii)  zB' = (z/a)B_{p−1} − ((2p+b−1)/a − p)B_p
    (iii) (z/a)B_{p−1} + c(z/2)^{1−a} z B_{p+a} = ((2p+b−1)/a)B_p
    """
    z = _nonzero_complex(z)
    a, b, p, c = params.a, params.b, params.p, params.c
    value = eval_gbessel(params, z, cfg)
    z_slope = z * eval_gbessel_deriv(params, z, cfg)
    lowered = (z / a) * eval_gbessel(params.with_order(p - 1.0), z, cfg)
    raised = c * principal_power(z / 2.0, 1.0 - a) * z * eval_gbessel(params.with_order(p + a), z, cfg)
    coefficient = (2.0 * p + b - 1.0) / a

    norm = max(1.0, abs(value))
    first = abs(z_slope - (p * value - raised)) / norm
    second = abs(z_slope - (lowered - (coefficient - p) * value)) / norm
    third = abs(lowered + raised - coefficient * value) / norm
    return first, second, third


# ----------------------------------------------------------------------
# Log-derivatives
# ----------------------------------------------------------------------


def log_deriv_gbessel_normalized(
    a: int, nu: float, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG
) -> complex:
    """z J_{ν−1}(z)/J_ν(z) − (2−a)ν + 1 − a, the closed form used by the radius equations."""
    if not nu > -1.0 / a:
        raise InvalidParameterError(f"requires ν > −1/a, got ν={nu!r}")
    z = complex(z)
    if z == 0:
        return complex(a * nu - a + 1.0)
    # z J_{ν−1}/J_ν = z J'_ν/J_ν + ν
    shifted_ratio = bessel_j_log_deriv(nu, z, cfg) + nu
    return shifted_ratio - (2.0 - a) * nu + 1.0 - a


def log_deriv_gbessel_direct(a: int, nu: float, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """x B'(x)/B(x) at x = a^{a/2} z for B = ₐB_{2a−1,aν−a+1,1}, straight from the series."""
    if not nu > -1.0 / a:
        raise InvalidParameterError(f"requires ν > −1/a, got ν={nu!r}")
    return gbessel_log_deriv(GBesselParams.normalized(a, nu), _scale(a) * complex(z), cfg)


def weierstrass_log_deriv(nu: float, z: Scalar, n_zeros: int = DEFAULT_WEIERSTRASS_ZEROS) -> complex:
    """ν − Σ_{n≤N} 2z²/(j²_{ν,n} − z²), the truncated zero expansion of z J'_ν/J_ν."""
    if not nu > -1.0:
        raise InvalidParameterError(f"requires ν > −1, got ν={nu!r}")
    z = complex(z)
    if z == 0:
        return complex(nu)
    squared = z * z
    gaps = np.asarray(bessel_j_zeros(nu, n_zeros)) ** 2 - squared
    if np.any(gaps == 0):
        raise PoleError(f"z={z} coincides with a zero of J_{nu:g}")
    return complex(nu - np.sum(2.0 * squared / gaps))


def weierstrass_tail_bound(z: Scalar, n_zeros: int) -> float:
    """Bound on the omitted terms, (|z|²/π²)(1/N + 1/(N+1)).

    Valid when j_{ν,n} ≥ nπ (orders ν ≥ 1/2) and |z| ≤ π.
    """
    radius_sq = abs(complex(z)) ** 2
    return radius_sq / math.pi**2 * (1.0 / n_zeros + 1.0 / (n_zeros + 1))
