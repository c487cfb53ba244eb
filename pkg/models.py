"""
Domain records for StarBessel.
Parameters of the generalized Bessel series, truncation policy, zeros, roots and reports.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from exceptions import InvalidParameterError


class Family(str, Enum):
    """Normalized families built from the generalized Bessel function."""

    F = "f"
    G = "g"
    H = "h"

    @classmethod
    def parse(cls, token: str) -> "Family":
        if isinstance(token, cls):
            return token
        try:
            return cls(str(token).lower())
        except ValueError as exc:
            raise InvalidParameterError(f"unknown family {token!r}; expected f, g or h") from exc


class EquationId(str, Enum):
    """Tokens naming the equation a RootResult satisfies."""

    BESSEL_ZERO = "bessel-zero"
    DINI = "dini"
    MODIFIED_DINI = "modified-dini"
    GBESSEL_ZERO = "gbessel-zero"
    RADIUS_F = "radius-f"
    RADIUS_F_MODIFIED = "radius-f-modified"
    RADIUS_G = "radius-g"
    RADIUS_H = "radius-h"
    THRESHOLD_F = "threshold-f"
    THRESHOLD_G = "threshold-g"
    NU_TILDE = "nu-tilde"


class FunctionalRoute(str, Enum):
    """How Re(zF'/F) is obtained: closed Bessel formulas or the series of F itself."""

    CLOSED = "closed"
    SERIES = "series"


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidParameterError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class GBesselParams:
    """The tuple (a, b, p, c) of the series Σ (−c)^k/(k! Γ(ak+p+(b+1)/2)) (z/2)^{2k+p}."""

    a: int
    b: float
    p: float
    c: float

    def __post_init__(self) -> None:
        if isinstance(self.a, bool) or int(self.a) != self.a or self.a < 1:
            raise InvalidParameterError(f"a must be a positive integer, got {self.a!r}")
        object.__setattr__(self, "a", int(self.a))
        for name in ("b", "p", "c"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))

    @property
    def s(self) -> float:
        """Gamma argument of the k=0 term."""
        return self.p + (self.b + 1.0) / 2.0

    @classmethod
    def bessel_j(cls, nu: float) -> "GBesselParams":
        return cls(a=1, b=1.0, p=nu, c=1.0)

    @classmethod
    def bessel_i(cls, nu: float) -> "GBesselParams":
        return cls(a=1, b=1.0, p=nu, c=-1.0)

    @classmethod
    def normalized(cls, a: int, nu: float) -> "GBesselParams":
        """Parameters (a, 2a−1, aν−a+1, 1) behind the families f, g and h."""
        return cls(a=a, b=2.0 * a - 1.0, p=a * nu - a + 1.0, c=1.0)

    def with_order(self, p: float) -> "GBesselParams":
        return GBesselParams(a=self.a, b=self.b, p=p, c=self.c)


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation policy shared by every series evaluation."""

    max_terms: int = 200
    rel_tol: float = 1e-16

    def __post_init__(self) -> None:
        if isinstance(self.max_terms, bool) or int(self.max_terms) != self.max_terms or self.max_terms < 8:
            raise InvalidParameterError(f"max_terms must be an integer ≥ 8, got {self.max_terms!r}")
        if not (0.0 < float(self.rel_tol) < 1.0):
            raise InvalidParameterError(f"rel_tol must lie in (0, 1), got {self.rel_tol!r}")
        object.__setattr__(self, "max_terms", int(self.max_terms))
        object.__setattr__(self, "rel_tol", float(self.rel_tol))

    def refined(self) -> "SeriesConfig":
        """Twice the terms and half the tolerance."""
        return SeriesConfig(max_terms=2 * self.max_terms, rel_tol=self.rel_tol / 2.0)


@dataclass
class SeriesSum:
    """Regularized sums S = Σ c_k w^k and D = Σ k c_k w^k with stopping diagnostics."""

    total: Any
    weighted: Any
    terms: int
    last_term: float


@dataclass
class SeriesEvaluation:
    """A function value together with the truncation diagnostics that produced it."""

    value: complex
    terms: int
    last_term: float


@dataclass(frozen=True)
class BesselZero:
    """The n-th positive zero j_{ν,n} of J_ν."""

    nu: float
    n: int
    value: float


@dataclass(frozen=True)
class DiniSpec:
    """The Dini function x ↦ αJ_ν(x) + γ x J'_ν(x)."""

    nu: float
    alpha: float
    gamma_coef: float = 1.0

    def __post_init__(self) -> None:
        _finite("alpha", self.alpha)
        _finite("gamma_coef", self.gamma_coef)
        if not _finite("nu", self.nu) > -1.0:
            raise InvalidParameterError(f"Dini order must exceed −1, got ν={self.nu!r}")


@dataclass(frozen=True)
class RadiusQuery:
    """One radius-of-starlikeness problem."""

    a: int
    nu: float
    beta: float
    family: Family

    def __post_init__(self) -> None:
        if isinstance(self.a, bool) or int(self.a) != self.a or self.a < 1:
            raise InvalidParameterError(f"a must be a positive integer, got {self.a!r}")
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "family", Family.parse(self.family))
        beta = _finite("beta", self.beta)
        if not 0.0 <= beta < 1.0:
            raise InvalidParameterError(f"β must lie in [0, 1), got {beta!r}")
        nu = _finite("nu", self.nu)
        if not nu > -1.0 / self.a:
            raise InvalidParameterError(f"ν must exceed −1/a = {-1.0 / self.a:.6g}, got {nu!r}")


@dataclass
class RootResult:
    """A solved root, its residual, isolating bracket and defining equation."""

    value: float
    residual: float
    bracket_lo: float
    bracket_hi: float
    iterations: int
    equation_id: EquationId
    disk_radius: Optional[float] = None

    @property
    def clipped(self) -> float:
        """In-disk radius min(r, 1)."""
        radius = self.value if self.disk_radius is None else self.disk_radius
        return min(radius, 1.0)

    def to_dict(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "value": self.value,
            "residual": self.residual,
            "bracket_lo": self.bracket_lo,
            "bracket_hi": self.bracket_hi,
            "iterations": self.iterations,
            "equation_id": self.equation_id.value,
        }
        if self.disk_radius is not None:
            record["disk_radius"] = self.disk_radius
            record["clipped"] = self.clipped
        return record


@dataclass
class DiskReport:
    """Minimum of Re(zF'/F) − β over a polar grid."""

    minimum: float
    argmin: complex
    radius: float
    family: Family
    route: FunctionalRoute
    n_points: int
    heuristic: bool = True

    @property
    def passed(self) -> bool:
        return self.minimum > 0.0

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "minimum": self.minimum,
            "argmin_re": self.argmin.real,
            "argmin_im": self.argmin.imag,
            "radius": self.radius,
            "family": self.family.value,
            "route": self.route.value,
            "n_points": self.n_points,
            "heuristic": self.heuristic,
            "verdict": self.verdict,
        }
