"""
Baire Operators and Graph Completion

This module implements the lower Baire operator I, the upper Baire operator S
and the graph completion operator F = [I, S].

On cell functions the operators are exact: the infimum (supremum) over a
shrinking neighbourhood of a point in cell c settles at the minimum of lower
endpoints (maximum of upper endpoints) over the star of c. Since the star
relation is transitive, all three operators are idempotent.

For analytic functions the same limits are estimated numerically by sampling
a deterministic pattern on geometrically shrinking radii.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple

import numpy as np

from src.analytic_function import AnalyticIntervalFunction, DomainGuardError, Point
from src.cell_complex import CellIntervalFunction
from src.constants import EstimatorDefaults, ErrorMessages, OperatorName
from src.extreal_interval import ExtReal, Interval


logger = logging.getLogger(__name__)


def lower_baire(f: CellIntervalFunction) -> CellIntervalFunction:
    """
    Lower Baire operator I.

    I(f)(c) is the minimum of the lower endpoints of f over the star of c.
    The result is point-valued and equals I applied to the lower endpoint
    function of f.

    Args:
        f (CellIntervalFunction): The function

    Returns:
        CellIntervalFunction: The point-valued lower envelope
    """
    complex_ = f.complex
    return CellIntervalFunction(complex_, {
        c: Interval.point(min(f[d].lo for d in complex_.star_cells(c)))
        for c in complex_.cells
    })


def upper_baire(f: CellIntervalFunction) -> CellIntervalFunction:
    """
    Upper Baire operator S.

    S(f)(c) is the maximum of the upper endpoints of f over the star of c.

    Args:
        f (CellIntervalFunction): The function

    Returns:
        CellIntervalFunction: The point-valued upper envelope
    """
    complex_ = f.complex
    return CellIntervalFunction(complex_, {
        c: Interval.point(max(f[d].hi for d in complex_.star_cells(c)))
        for c in complex_.cells
    })


def graph_completion(f: CellIntervalFunction) -> CellIntervalFunction:
    """
    Graph completion operator F(f) = [I(f), S(f)].

    Every value of f is contained in the matching value of F(f).
    """
    complex_ = f.complex
    values = {}
    for c in complex_.cells:
        star = complex_.star_cells(c)
        values[c] = Interval(min(f[d].lo for d in star), max(f[d].hi for d in star))
    return CellIntervalFunction(complex_, values)


OPERATORS: Dict[OperatorName, Callable[[CellIntervalFunction], CellIntervalFunction]] = {
    OperatorName.LOWER: lower_baire,
    OperatorName.UPPER: upper_baire,
    OperatorName.COMPLETION: graph_completion,
}


def apply_operator(f: CellIntervalFunction, name) -> CellIntervalFunction:
    """
    Apply an operator selected by its name "I", "S" or "F".

    Raises:
        ValueError: If the name is not one of the three operators
    """
    try:
        operator = OPERATORS[OperatorName(str(name))]
    except ValueError:
        raise ValueError(ErrorMessages.unknown_operator(name)) from None
    return operator(f)


@dataclass(frozen=True)
class BaireEstimate:
    """
    Numeric estimate of I(f)(x) and S(f)(x) at one point.
    """

    point: Point
    lower: ExtReal
    upper: ExtReal
    radii_used: Tuple[float, ...]
    samples_per_radius: int
    converged: bool

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(ErrorMessages.ESTIMATE_ORDER)
        radii = self.radii_used
        if any(r <= 0 for r in radii) or any(a <= b for a, b in zip(radii, radii[1:])):
            raise ValueError(ErrorMessages.RADII_NOT_DECREASING)

    def as_interval(self) -> Interval:
        return Interval(self.lower, self.upper)


def _sample_offsets(dimension: int, samples_per_radius: int) -> np.ndarray:
    """
    Unit-radius sample pattern.

    1-D: samples_per_radius // 2 evenly spaced offsets on each side.
    2-D: ANGLES_2D angles times samples_per_radius // ANGLES_2D radius fractions.
    """
    if dimension == 1:
        count = samples_per_radius // 2
        if count < 1:
            raise ValueError(ErrorMessages.TOO_FEW_SAMPLES)
        steps = np.arange(1, count + 1) / count
        return np.concatenate([-steps[::-1], steps]).reshape(-1, 1)

    angles = EstimatorDefaults.ANGLES_2D
    fractions = samples_per_radius // angles
    if fractions < 1:
        raise ValueError(ErrorMessages.TOO_FEW_SAMPLES)
    theta = np.linspace(0.0, 2.0 * np.pi, angles, endpoint=False)
    rho = np.arange(1, fractions + 1) / fractions
    directions = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    return (rho[:, None, None] * directions[None, :, :]).reshape(-1, 2)


def _bounds_agree(a: ExtReal, b: ExtReal, tolerance: float) -> bool:
    if a == b:
        return True
    if math.isinf(a) or math.isinf(b):
        return False
    return abs(a - b) <= tolerance


def numeric_baire_estimate(f: AnalyticIntervalFunction, point: Sequence,
                           r0: float = EstimatorDefaults.INITIAL_RADIUS,
                           levels: int = EstimatorDefaults.LEVELS,
                           samples_per_radius: int = EstimatorDefaults.SAMPLES_PER_RADIUS,
                           tolerance: float = EstimatorDefaults.TOLERANCE) -> BaireEstimate:
    """
    Estimate the lower and upper Baire envelopes of an analytic function at a point.

    For every radius r_k = r0 * 2**-k the infimum of lower endpoints and the
    supremum of upper endpoints are taken over a fixed sample pattern scaled
    to r_k, always including the point itself. The lower estimate is the
    largest of these infima and the upper estimate the smallest supremum.

    Sample points outside the domain, or refused by the evaluator's precision
    guard, are left out. The point itself is never left out.

    Args:
        f (AnalyticIntervalFunction): The function
        point: Coordinates of the point
        r0 (float): Largest radius
        levels (int): Number of radii, at least 2
        samples_per_radius (int): Size of the sample pattern
        tolerance (float): Agreement required of the last two levels

    Returns:
        BaireEstimate: The estimate and whether the last two levels agreed

    Raises:
        ValueError: On invalid parameters, a point outside the domain, or an
            evaluator that does not return an Interval
    """
    if not r0 > 0:
        raise ValueError(ErrorMessages.NON_POSITIVE_RADIUS)
    if levels < EstimatorDefaults.MIN_LEVELS:
        raise ValueError(ErrorMessages.TOO_FEW_LEVELS)

    center = tuple(float(p) for p in point)
    value = f.evaluate(center)
    offsets = _sample_offsets(f.dimension, samples_per_radius)
    radii = tuple(r0 / EstimatorDefaults.RADIUS_SHRINK ** k for k in range(levels))

    infima = []
    suprema = []
    for radius in radii:
        lows = [value.lo]
        highs = [value.hi]
        for sample in np.asarray(center) + radius * offsets:
            sample = tuple(float(s) for s in sample)
            if not f.contains(sample):
                continue
            try:
                sample_value = f.evaluate(sample)
            except DomainGuardError:
                continue
            lows.append(sample_value.lo)
            highs.append(sample_value.hi)
        infima.append(min(lows))
        suprema.append(max(highs))

    converged = (_bounds_agree(infima[-1], infima[-2], tolerance)
                 and _bounds_agree(suprema[-1], suprema[-2], tolerance))
    if not converged:
        logger.warning("Estimate of %s at %s did not converge", f.name, center)
    logger.debug("Estimate of %s at %s: infima %s, suprema %s", f.name, center, infima, suprema)

    return BaireEstimate(
        point=center,
        lower=max(infima),
        upper=min(suprema),
        radii_used=radii,
        samples_per_radius=samples_per_radius,
        converged=converged,
    )
