"""
Extended Reals and Intervals

This module provides the order structure of the extended real line and the
closed extended interval type built on it.

Extended reals are plain Python numbers (int, float or Fraction) together
with the two float infinities; comparison is exact. An Interval is an
immutable pair [lo, hi] with lo <= hi. A degenerate interval [a, a] stands
for the point a itself.

The module provides:
- Conversion and validation of extended real values
- The Interval value type
- Width and modulus of an interval
- The endpoint partial order and set inclusion between intervals

No interval arithmetic is provided.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Iterable, Union

from src.constants import ExtRealConstants, ErrorMessages


ExtReal = Union[int, float, Fraction]

POS_INF = ExtRealConstants.POS_INF
NEG_INF = ExtRealConstants.NEG_INF


def to_ext_real(value) -> ExtReal:
    """
    Validate a value as an extended real number.

    Accepts ints, floats (including the infinities), Fractions and the
    tokens "+inf", "-inf" and "inf".

    Args:
        value: The value to validate

    Returns:
        ExtReal: The value itself, or the matching float infinity for a token

    Raises:
        ValueError: If the value is NaN, a boolean, or not a real number
    """
    if isinstance(value, bool):
        raise ValueError(ErrorMessages.BOOL_NOT_ALLOWED)
    if isinstance(value, str):
        token = value.strip().lower()
        if token == ExtRealConstants.POS_INF_TOKEN or token == ExtRealConstants.PLAIN_INF_TOKEN:
            return POS_INF
        if token == ExtRealConstants.NEG_INF_TOKEN:
            return NEG_INF
        raise ValueError(ErrorMessages.not_ext_real(value))
    if isinstance(value, (int, Fraction)):
        return value
    if isinstance(value, Real):
        value = float(value)
        if math.isnan(value):
            raise ValueError(ErrorMessages.NAN_NOT_ALLOWED)
        return value
    raise ValueError(ErrorMessages.not_ext_real(value))


def is_finite(value: ExtReal) -> bool:
    """Return True unless the value is one of the two infinities."""
    return value != POS_INF and value != NEG_INF


@dataclass(frozen=True)
class Interval:
    """
    A closed extended interval [lo, hi] with lo <= hi.

    Endpoints are compared exactly. Construction with lo > hi is rejected,
    never silently swapped.
    """

    lo: ExtReal
    hi: ExtReal

    def __post_init__(self):
        lo = to_ext_real(self.lo)
        hi = to_ext_real(self.hi)
        if lo > hi:
            raise ValueError(ErrorMessages.reversed_interval(lo, hi))
        # Tokens such as "+inf" are normalised to floats
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: ExtReal) -> "Interval":
        """Return the degenerate interval [value, value]."""
        return cls(value, value)

    @property
    def is_degenerate(self) -> bool:
        """True when the interval is a single point of the extended line."""
        return self.lo == self.hi

    def contains(self, value: ExtReal) -> bool:
        """True when lo <= value <= hi."""
        return self.lo <= value <= self.hi

    def __str__(self):
        if self.is_degenerate:
            return f"{self.lo}"
        return f"[{self.lo}, {self.hi}]"


def width(a: Interval) -> ExtReal:
    """
    Width of an interval.

    hi - lo for finite endpoints, +inf when at least one endpoint is
    infinite, and 0 for the degenerate intervals [-inf, -inf] and
    [+inf, +inf].

    Args:
        a (Interval): The interval

    Returns:
        ExtReal: The nonnegative width
    """
    if a.lo == a.hi:
        return 0
    if not is_finite(a.lo) or not is_finite(a.hi):
        return POS_INF
    return a.hi - a.lo


def modulus(a: Interval) -> ExtReal:
    """
    Modulus of an interval: the larger absolute endpoint value.

    Args:
        a (Interval): The interval

    Returns:
        ExtReal: max(|lo|, |hi|), +inf if either endpoint is infinite
    """
    return max(abs(a.lo), abs(a.hi))


def interval_leq(a: Interval, b: Interval) -> bool:
    """
    Endpoint partial order: a <= b iff a.lo <= b.lo and a.hi <= b.hi.
    """
    return a.lo <= b.lo and a.hi <= b.hi


def interval_subset(a: Interval, b: Interval) -> bool:
    """
    Set inclusion: a is contained in b iff b.lo <= a.lo and a.hi <= b.hi.
    """
    return b.lo <= a.lo and a.hi <= b.hi


def interval_hull(intervals: Iterable[Interval]) -> Interval:
    """
    Smallest interval containing every given interval.

    Args:
        intervals: A non-empty iterable of intervals

    Returns:
        Interval: [min of lower endpoints, max of upper endpoints]

    Raises:
        ValueError: If no interval is given
    """
    intervals = list(intervals)
    if not intervals:
        raise ValueError(ErrorMessages.EMPTY_HULL)
    return Interval(min(a.lo for a in intervals), max(a.hi for a in intervals))
