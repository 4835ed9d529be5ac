"""
Analytic Interval Functions

Closed-form interval-valued functions on a box of the line or the plane,
used by the numeric Baire estimator and by the gallery of examples.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from src.constants import ErrorMessages
from src.extreal_interval import ExtReal, Interval


Point = Tuple[float, ...]


class DomainGuardError(ValueError):
    """Raised when an evaluator refuses a point it cannot resolve in floating point."""


@dataclass(frozen=True)
class AnalyticIntervalFunction:
    """
    An interval-valued function given by a point evaluator.

    Attributes:
        name: Label used in logs and reports
        domain: One closed (lo, hi) range per coordinate, infinities allowed
        evaluator: Deterministic map from a point to an Interval
        discontinuity_locus: Predicate marking points where the value is a
            nondegenerate interval or the function jumps
        singular_distance: Optional distance from a point to the set where
            classical derivatives fail (the locus plus any kink lines)
    """

    name: str
    domain: Tuple[Tuple[ExtReal, ExtReal], ...]
    evaluator: Callable[[Point], Interval]
    discontinuity_locus: Callable[[Point], bool]
    singular_distance: Optional[Callable[[Point], float]] = None

    @property
    def dimension(self) -> int:
        return len(self.domain)

    def contains(self, point: Sequence) -> bool:
        """True when every coordinate lies in its closed domain range."""
        if len(point) != self.dimension:
            return False
        return all(lo <= p <= hi for p, (lo, hi) in zip(point, self.domain))

    def evaluate(self, point: Sequence) -> Interval:
        """
        Evaluate the function and check the result is an Interval.

        Raises:
            ValueError: If the point is outside the domain or the evaluator
                returns something other than an Interval
        """
        point = tuple(point)
        if not self.contains(point):
            raise ValueError(ErrorMessages.POINT_OUTSIDE_DOMAIN)
        value = self.evaluator(point)
        if not isinstance(value, Interval):
            raise ValueError(ErrorMessages.invalid_evaluator_output(value))
        return value

    def on_locus(self, point: Sequence) -> bool:
        return bool(self.discontinuity_locus(tuple(point)))
