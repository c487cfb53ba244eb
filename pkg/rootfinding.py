"""Bracketing, bisection and safeguarded Newton iterations shared by the solvers."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple

import config
from exceptions import BracketingError

logger = logging.getLogger(__name__)

RealFunction = Callable[[float], float]
ValueAndSlope = Callable[[float], Tuple[float, float]]


@dataclass
class Bracket:
    """An interval [lo, hi] whose endpoints carry opposite signs (sign_lo at lo)."""

    lo: float
    hi: float
    sign_lo: int
    evaluations: int = 0

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)


def sign(value: float) -> int:
    if value > 0.0:
        return 1
    if value < 0.0:
        return -1
    return 0


def first_sign_change(
    func: RealFunction,
    points: Iterable[float],
    start: float,
    sign_at_start: int,
    label: str = "function",
) -> Bracket:
    """Walk the points in order and return the first cell where the sign flips.

    The sign at `start` is supplied by the caller, which lets the walk begin at
    a point where the function itself cannot be evaluated (such as 0⁺ for J_ν).
    A grid point where the function vanishes exactly closes the bracket there.
    """
    previous_x, previous_sign = start, sign_at_start
    evaluations = 0
    for x in points:
        value = func(x)
        evaluations += 1
        current = sign(value)
        if current == 0:
            return Bracket(lo=previous_x, hi=x, sign_lo=previous_sign, evaluations=evaluations)
        if current != previous_sign:
            return Bracket(lo=previous_x, hi=x, sign_lo=previous_sign, evaluations=evaluations)
        previous_x, previous_sign = x, current
    raise BracketingError(f"no sign change of {label} found up to x={previous_x:.6g}")


def bisect(
    func: RealFunction,
    bracket: Bracket,
    width: float = config.ROOT_WIDTH,
    max_iterations: int = config.MAX_BISECTIONS,
) -> Tuple[Bracket, int]:
    """Halve the bracket until it is narrower than `width` (relative above 1)."""
    lo, hi, sign_lo = bracket.lo, bracket.hi, bracket.sign_lo
    iterations = 0
    while hi - lo > width * max(1.0, abs(lo), abs(hi)) and iterations < max_iterations:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        value = sign(func(mid))
        iterations += 1
        if value == 0:
            return Bracket(lo=mid, hi=mid, sign_lo=0), iterations
        if value == sign_lo:
            lo = mid
        else:
            hi = mid
    return Bracket(lo=lo, hi=hi, sign_lo=sign_lo), iterations


def newton_polish(
    func: ValueAndSlope,
    x: float,
    lo: float,
    hi: float,
    steps: int = config.NEWTON_POLISH_STEPS,
) -> Tuple[float, int]:
    """A few Newton steps from x; a step leaving [lo, hi] falls back to x."""
    taken = 0
    for _ in range(steps):
        value, slope = func(x)
        if value == 0.0 or slope == 0.0:
            break
        candidate = x - value / slope
        taken += 1
        if not lo <= candidate <= hi:
            break
        if candidate == x:
            break
        x = candidate
    return x, taken


def newton_bisection(
    func: ValueAndSlope,
    bracket: Bracket,
    x0: Optional[float] = None,
    xtol: float = 1e-14,
    max_iterations: int = config.MAX_BISECTIONS,
) -> Tuple[float, Bracket, int]:
    """Newton iteration kept inside a shrinking bracket, bisecting whenever
    the Newton step would leave it or fails to halve the previous step."""
    lo, hi, sign_lo = bracket.lo, bracket.hi, bracket.sign_lo
    x = x0 if x0 is not None and lo < x0 < hi else 0.5 * (lo + hi)
    step_before_last = hi - lo
    step = step_before_last
    for iteration in range(1, max_iterations + 1):
        value, slope = func(x)
        current = sign(value)
        if current == 0:
            return x, Bracket(lo=x, hi=x, sign_lo=0), iteration
        if current == sign_lo:
            lo = x
        else:
            hi = x

        newton_ok = slope != 0.0
        if newton_ok:
            candidate = x - value / slope
            newton_ok = lo < candidate < hi and abs(2.0 * value) <= abs(step_before_last * slope)
        step_before_last = step
        if newton_ok:
            step = x - candidate
            x = candidate
        else:
            step = 0.5 * (hi - lo)
            x = lo + step

        if abs(step) <= xtol * max(1.0, abs(x)) or hi - lo <= xtol * max(1.0, abs(x)):
            return x, Bracket(lo=lo, hi=hi, sign_lo=sign_lo), iteration
    logger.debug("newton_bisection stopped after %d iterations at x=%.17g", max_iterations, x)
    return x, Bracket(lo=lo, hi=hi, sign_lo=sign_lo), max_iterations


def geometric_points(start: float, step: float, growth: float, limit: float) -> Iterable[float]:
    """start+step, then increments growing by `growth`, stopping past `limit`."""
    x = start
    while True:
        x += step
        if x > limit:
            return
        yield x
        step *= growth
