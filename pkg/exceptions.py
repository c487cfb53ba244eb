"""Error hierarchy shared by the numeric modules."""

from __future__ import annotations


class GBesselError(Exception):
    """Base class for every numeric failure raised by StarBessel."""


class InvalidParameterError(GBesselError, ValueError):
    """Raised when an operation's precondition is violated."""


class PoleError(GBesselError, ZeroDivisionError):
    """Raised at a gamma pole, a zero in a denominator or a vanishing divisor."""


class GammaOverflowError(GBesselError, OverflowError):
    """Raised when Γ(x) exceeds the double-precision range."""


class SeriesConvergenceError(GBesselError, ArithmeticError):
    """Raised when a series hits max_terms before its truncation criterion."""

    def __init__(self, message: str, terms: int = 0, last_term: float = 0.0) -> None:
        super().__init__(message)
        self.terms = terms
        self.last_term = last_term


class BranchCutError(GBesselError, ValueError):
    """Raised when a principal power or logarithm is taken on the negative real axis."""


class BracketingError(GBesselError, RuntimeError):
    """Raised when no sign change is found inside the permitted search horizon."""


class UnsupportedParametersError(GBesselError, ValueError):
    """Raised when a condition required by a radius or threshold equation fails for the requested parameters."""

    def __init__(self, hypothesis: str, detail: str = "") -> None:
        message = f"hypothesis violated: {hypothesis}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.hypothesis = hypothesis
