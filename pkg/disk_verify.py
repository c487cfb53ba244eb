"""Normalized functions f, g, h on the complex disk and sampled starlikeness checks."""

from __future__ import annotations

import cmath
import logging
import math
from typing import List, Union

import numpy as np

import config
from bessel_core import DEFAULT_CONFIG, Scalar, bessel_j_log_deriv, gamma_fn, principal_power, regularized_series
from exceptions import BranchCutError, InvalidParameterError, PoleError
from models import DiskReport, Family, FunctionalRoute, GBesselParams, SeriesConfig
from starlike_solvers import a_scale
from zeros import bessel_j_zero, gbessel_smallest_positive_zero

logger = logging.getLogger(__name__)


def _check(a: int, nu: float, family: Family) -> None:
    if isinstance(a, bool) or int(a) != a or a < 1:
        raise InvalidParameterError(f"a must be a positive integer, got {a!r}")
    if family is Family.F and not nu > (a - 1.0) / a:
        raise InvalidParameterError(f"f_{{a,ν}} requires ν > (a−1)/a = {(a - 1.0) / a:.6g}, got {nu!r}")
    if not nu > -1.0 / a:
        raise InvalidParameterError(f"requires ν > −1/a = {-1.0 / a:.6g}, got {nu!r}")


def normalized_coefficients(a: int, nu: float, n_terms: int) -> List[float]:
    """(−1)^k Γ(aν+1) a^{ak} / (k! 2^{2k} Γ(ak+aν+1)) for k < n_terms."""
    _check(a, nu, Family.G)
    coefficients = [1.0]
    growth = a**a / 4.0
    for k in range(n_terms - 1):
        divisor = float(k + 1)
        for m in range(1, a + 1):
            divisor *= a * k + a * nu + m
        coefficients.append(-coefficients[-1] * growth / divisor)
    return coefficients


def _inner(a: int, nu: float, w, cfg: SeriesConfig):
    """1 + Σ_{k≥1} c_k w^k, the series of ₐB(a^{a/2}√w) normalized to start at 1."""
    params = GBesselParams.normalized(a, nu)
    sums = regularized_series(params, a**a * w / 4.0, cfg)
    return gamma_fn(params.s) * sums.total


# ----------------------------------------------------------------------
# The normalized families
# ----------------------------------------------------------------------


def eval_f(a: int, nu: float, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """f_{a,ν}(z) = z · inner(z²)^{1/(aν−a+1)} on the principal branch."""
    _check(a, nu, Family.F)
    z = complex(z)
    limit = gbessel_smallest_positive_zero(a, nu)
    if abs(z) >= limit:
        raise InvalidParameterError(f"|z| = {abs(z):.6g} is outside the zero-free disk of radius {limit:.6g}")
    inner = _inner(a, nu, z * z, cfg)
    if inner.imag == 0.0 and inner.real <= 0.0:
        raise BranchCutError(f"inner factor {inner} lies on the branch cut at z={z}")
    return z * principal_power(inner, 1.0 / (a * nu - a + 1.0))


def eval_g(a: int, nu: float, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """g_{a,ν}(z) = z · inner(z²)."""
    _check(a, nu, Family.G)
    z = complex(z)
    return z * _inner(a, nu, z * z, cfg)


def eval_h(a: int, nu: float, z: Scalar, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """h_{a,ν}(z) = z · inner(z)."""
    _check(a, nu, Family.H)
    z = complex(z)
    return z * _inner(a, nu, z, cfg)


FAMILY_FUNCTIONS = {Family.F: eval_f, Family.G: eval_g, Family.H: eval_h}


# ----------------------------------------------------------------------
# Starlikeness functional
# ----------------------------------------------------------------------


def _closed_log_derivative(a: int, nu: float, z, family: Family, cfg: SeriesConfig):
    scale = a_scale(a)
    shift = (nu - 1.0) * (1.0 - a)
    if family is Family.H:
        root = np.sqrt(z) if np.ndim(z) else cmath.sqrt(complex(z))
        return (1.0 + a - a * nu) / 2.0 + (scale / 2.0) * (bessel_j_log_deriv(nu, root, cfg) - shift)
    bessel_part = bessel_j_log_deriv(nu, z, cfg) - shift
    if family is Family.F:
        return scale / (a * nu - a + 1.0) * bessel_part
    return a * (1.0 - nu) + scale * bessel_part


def _series_log_derivative(a: int, nu: float, z, family: Family, cfg: SeriesConfig):
    params = GBesselParams.normalized(a, nu)
    w = z if family is Family.H else z * z
    sums = regularized_series(params, a**a * w / 4.0, cfg)
    if np.any(sums.total == 0):
        raise PoleError("log-derivative requested at a zero of the inner series")
    ratio = sums.weighted / sums.total
    if family is Family.F:
        return 1.0 + 2.0 * ratio / params.p
    if family is Family.G:
        return 1.0 + 2.0 * ratio
    return 1.0 + ratio


def log_derivative(
    a: int,
    nu: float,
    z,
    family: Union[Family, str],
    cfg: SeriesConfig = DEFAULT_CONFIG,
    route: Union[FunctionalRoute, str] = FunctionalRoute.CLOSED,
):
    """z F'(z)/F(z) for F in {f, g, h}; scalar or numpy array argument."""
    family = Family.parse(family)
    route = FunctionalRoute(route)
    _check(a, nu, family)
    if route is FunctionalRoute.CLOSED:
        return _closed_log_derivative(a, nu, z, family, cfg)
    return _series_log_derivative(a, nu, z, family, cfg)


def starlike_functional(
    a: int,
    nu: float,
    beta: float,
    z: Scalar,
    family: Union[Family, str],
    cfg: SeriesConfig = DEFAULT_CONFIG,
    route: Union[FunctionalRoute, str] = FunctionalRoute.CLOSED,
) -> float:
    """Re(zF'(z)/F(z)) − β."""
    if not 0.0 <= beta < 1.0:
        raise InvalidParameterError(f"β must lie in [0, 1), got {beta!r}")
    return float(np.real(log_derivative(a, nu, complex(z), family, cfg, route))) - beta


def verify_starlike_on_disk(
    a: int,
    nu: float,
    beta: float,
    radius: float,
    n_circles: int = config.DISK_CIRCLES,
    n_angles: int = config.DISK_ANGLES,
    family: Union[Family, str] = Family.F,
    cfg: SeriesConfig = DEFAULT_CONFIG,
    route: Union[FunctionalRoute, str] = FunctionalRoute.CLOSED,
) -> DiskReport:
    """Minimum of Re(zF'/F) − β over a polar grid of |z| ≤ radius.

    Circles are geometrically spaced from radius·DISK_INNER_FRACTION to radius.
    Angles sit at half-step offsets, which keeps the negative real axis out of
    the grid, and each circle also samples its positive real point. The
    verdict is sampled evidence, not a proof.

    Near the origin the two routes part ways when a > 1. With A = a^{a/2} and
    p = aν − a + 1 the closed route tends to A − β for f, a(1 − ν) + Ap − β for g
    and 1 + (A − 1)p/2 − β for h, while the series route tends to 1 − β.
    """
    family = Family.parse(family)
    route = FunctionalRoute(route)
    if not 0.0 <= beta < 1.0:
        raise InvalidParameterError(f"β must lie in [0, 1), got {beta!r}")
    if not radius > 0.0 or n_circles < 1 or n_angles < 1:
        raise InvalidParameterError("radius, n_circles and n_angles must be positive")
    _check(a, nu, family)
    bessel_radius = math.sqrt(radius) if family is Family.H else radius
    first_zero = bessel_j_zero(nu, 1).value
    if bessel_radius >= first_zero:
        raise InvalidParameterError(
            f"radius {radius:.6g} reaches the first Bessel-factor zero j_{{{nu:g},1}} = {first_zero:.6g}"
        )

    if n_circles == 1:
        radii = np.array([radius])
    else:
        radii = np.geomspace(radius * config.DISK_INNER_FRACTION, radius, n_circles)
    step = 2.0 * math.pi / n_angles
    angles = np.append(-math.pi + (np.arange(n_angles) + 0.5) * step, 0.0)
    grid = (radii[:, None] * np.exp(1j * angles[None, :])).ravel()

    values = np.real(log_derivative(a, nu, grid, family, cfg, route)) - beta
    index = int(np.argmin(values))
    report = DiskReport(
        minimum=float(values[index]),
        argmin=complex(grid[index]),
        radius=radius,
        family=family,
        route=route,
        n_points=int(grid.size),
    )
    logger.info(
        "disk check %s a=%d ν=%g β=%g r=%g: min %.6g at %s (%s)",
        family.value, a, nu, beta, radius, report.minimum, report.argmin, report.verdict,
    )
    return report
