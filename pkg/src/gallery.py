"""
Gallery of Worked Examples

Exact constructors and evaluators for the example functions:
- Step functions with one discontinuity at 0, point- or interval-valued
- alpha, the sign-like H-continuous step, and beta = alpha(sin(1/(x^2 + y^2)))
- The shock wave solution of U_t + U U_x = 0 with a rarefaction fan that
  steepens into a shock at t = 1, moving along x = (t - 1)/2

It also provides the finite-difference PDE residual, the shock speed
measurement by bisection, and the sweeps used to emit CSV data.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src.analytic_function import AnalyticIntervalFunction, DomainGuardError, Point
from src.cell_complex import CellIntervalFunction, build_complex
from src.constants import ErrorMessages, GuardConstants, ResidualDefaults, ShockDefaults
from src.extreal_interval import NEG_INF, POS_INF, ExtReal, Interval


logger = logging.getLogger(__name__)

UNIT_INTERVAL = Interval(-1, 1)


# === Example step functions ===

def _step_complex():
    return build_complex(1, [[0]])


def make_step(a: ExtReal, b: ExtReal, c: ExtReal) -> CellIntervalFunction:
    """
    Point-valued step: a for x < 0, b at x = 0, c for x > 0.
    """
    complex_ = _step_complex()
    return CellIntervalFunction(complex_, {
        (0,): Interval.point(a),
        (1,): Interval.point(b),
        (2,): Interval.point(c),
    })


def make_interval_step(a: ExtReal, bc: Interval, d: ExtReal) -> CellIntervalFunction:
    """
    Interval-valued step: a for x < 0, the interval bc at x = 0, d for x > 0.
    """
    complex_ = _step_complex()
    return CellIntervalFunction(complex_, {
        (0,): Interval.point(a),
        (1,): bc,
        (2,): Interval.point(d),
    })


def make_alpha() -> CellIntervalFunction:
    """alpha: -1 for x < 0, [-1, 1] at 0, 1 for x > 0."""
    return make_interval_step(-1, UNIT_INTERVAL, 1)


def alpha_eval(x) -> Interval:
    """Closed-form alpha at a real argument."""
    if x < 0:
        return Interval.point(-1)
    if x > 0:
        return Interval.point(1)
    return UNIT_INTERVAL


def alpha_function() -> AnalyticIntervalFunction:
    return AnalyticIntervalFunction(
        name="alpha",
        domain=((NEG_INF, POS_INF),),
        evaluator=lambda p: alpha_eval(p[0]),
        discontinuity_locus=lambda p: p[0] == 0,
    )


# === beta ===

def _nearest_circle(rho_squared) -> Tuple[int, float]:
    s = 1.0 / float(rho_squared)
    k = round(s / math.pi)
    return k, s


def _on_beta_circle(rho_squared) -> bool:
    k, s = _nearest_circle(rho_squared)
    return k >= 1 and abs(s - k * math.pi) <= GuardConstants.BETA_LOCUS_RELATIVE_TOL * s


def beta_eval(x, y) -> Interval:
    """
    beta(x, y) = alpha(sin(1/(x^2 + y^2))), and [-1, 1] at the origin.

    The argument of alpha is zero exactly on the circles x^2 + y^2 = 1/(k pi);
    a point counts as on a circle when 1/(x^2 + y^2) is within a relative
    1e-12 of k pi.

    Raises:
        DomainGuardError: For 0 < x^2 + y^2 < 1e-12
    """
    rho_squared = x * x + y * y
    if rho_squared == 0:
        return UNIT_INTERVAL
    if rho_squared < GuardConstants.BETA_ORIGIN_GUARD:
        raise DomainGuardError(ErrorMessages.BETA_TOO_CLOSE_TO_ORIGIN)
    if _on_beta_circle(rho_squared):
        return UNIT_INTERVAL
    return alpha_eval(math.sin(1.0 / float(rho_squared)))


def beta_locus(point: Point) -> bool:
    x, y = point
    rho_squared = x * x + y * y
    return rho_squared == 0 or _on_beta_circle(rho_squared)


def beta_function() -> AnalyticIntervalFunction:
    return AnalyticIntervalFunction(
        name="beta",
        domain=((NEG_INF, POS_INF), (NEG_INF, POS_INF)),
        evaluator=lambda p: beta_eval(p[0], p[1]),
        discontinuity_locus=beta_locus,
    )


# === Shock wave solution ===

def shock_initial_profile(x) -> Interval:
    """Initial data: 1 for x <= -1, -x on [-1, 0], 0 for x >= 0."""
    if x <= -1:
        return Interval.point(1)
    if x <= 0:
        return Interval.point(-x)
    return Interval.point(0)


def shock_solution_eval(t, x) -> Interval:
    """
    The shock wave solution U(t, x).

    For 0 <= t < 1 a fan x/(t - 1) joins the states 1 (left) and 0 (right);
    for t >= 1 the states meet at the shock x = (t - 1)/2 where U = [-1, 1].
    Comparisons are exact, so Fraction arguments land on the shock line
    exactly.

    Raises:
        ValueError: If t < 0
    """
    if t < 0:
        raise ValueError(ErrorMessages.NEGATIVE_TIME)
    if t < 1:
        if x < t - 1:
            return Interval.point(1)
        if x <= 0:
            return Interval.point(x / (t - 1))
        return Interval.point(0)
    shock = (t - 1) / 2
    if x < shock:
        return Interval.point(1)
    if x == shock:
        return UNIT_INTERVAL
    return Interval.point(0)


def shock_locus(point: Point) -> bool:
    t, x = point
    return t >= 1 and x == (t - 1) / 2


def _distance_to_segment(p, a, b) -> float:
    p, a, b = (np.asarray(v, dtype=float) for v in (p, a, b))
    direction = b - a
    s = np.clip(np.dot(p - a, direction) / np.dot(direction, direction), 0.0, 1.0)
    return float(np.linalg.norm(p - (a + s * direction)))


def shock_singular_distance(point: Point) -> float:
    """
    Distance from (t, x) to the shock ray and the two kink segments of the fan.
    """
    t, x = (float(v) for v in point)
    apex = (1.0, 0.0)
    kinks = min(
        _distance_to_segment((t, x), (0.0, -1.0), apex),
        _distance_to_segment((t, x), (0.0, 0.0), apex),
    )
    # Shock ray from the apex in direction (1, 1/2)
    direction = np.array([1.0, 0.5])
    offset = np.array([t, x]) - np.asarray(apex)
    s = max(0.0, float(np.dot(offset, direction) / np.dot(direction, direction)))
    ray = float(np.linalg.norm(offset - s * direction))
    return min(kinks, ray)


def shock_solution() -> AnalyticIntervalFunction:
    return AnalyticIntervalFunction(
        name="shock",
        domain=((0, POS_INF), (NEG_INF, POS_INF)),
        evaluator=lambda p: shock_solution_eval(p[0], p[1]),
        discontinuity_locus=shock_locus,
        singular_distance=shock_singular_distance,
    )


def shock_slice(t) -> AnalyticIntervalFunction:
    """The shock solution restricted to a fixed time, as a function of x."""
    return AnalyticIntervalFunction(
        name=f"shock(t={t})",
        domain=((NEG_INF, POS_INF),),
        evaluator=lambda p: shock_solution_eval(t, p[0]),
        discontinuity_locus=lambda p: shock_locus((t, p[0])),
    )


GALLERY_FUNCTIONS = {
    "alpha": alpha_function,
    "beta": beta_function,
    "shock": shock_solution,
}


def gallery_function(name: str) -> AnalyticIntervalFunction:
    """
    Look up a closed-form example by name: "alpha", "beta" or "shock".

    Raises:
        ValueError: If the name is not in the gallery
    """
    if name not in GALLERY_FUNCTIONS:
        raise ValueError(ErrorMessages.unknown_function(name))
    return GALLERY_FUNCTIONS[name]()


# === PDE residual ===

@dataclass(frozen=True)
class ResidualReport:
    """
    Central-difference residual of U_t + U U_x at one point.
    """

    point: Tuple[float, float]
    step: float
    residual: Optional[float]
    skipped: bool

    def __post_init__(self):
        if not self.skipped and (self.residual is None or not math.isfinite(self.residual)):
            raise ValueError(ErrorMessages.LOCUS_INCONSISTENT)


def pde_residual(U: AnalyticIntervalFunction, t, x, h: float = ResidualDefaults.STEP) -> ResidualReport:
    """
    Residual of U_t + U U_x = 0 by second-order central differences.

    The stencil is skipped when any of its points lies within 2h of the
    singular set of U, sits on the discontinuity locus, or has a
    nondegenerate value.

    Args:
        U (AnalyticIntervalFunction): Function of (t, x)
        t, x: The point
        h (float): Step in both variables

    Returns:
        ResidualReport: The residual, or a skipped report

    Raises:
        ValueError: If h <= 0 or the stencil leaves the domain
        RuntimeError: If a nondegenerate value is met where the locus
            predicate says the function is single-valued
    """
    if not h > 0:
        raise ValueError(ErrorMessages.NON_POSITIVE_STEP)
    t, x = float(t), float(x)
    stencil = [(t + h, x), (t - h, x), (t, x + h), (t, x - h)]
    if not all(U.contains(p) for p in stencil):
        raise ValueError(ErrorMessages.STENCIL_OUTSIDE_DOMAIN)

    guard = ResidualDefaults.GUARD_FACTOR * h
    points = stencil + [(t, x)]
    near_singular = U.singular_distance is not None and any(
        U.singular_distance(p) < guard for p in points)
    if near_singular or any(U.on_locus(p) for p in points):
        return ResidualReport(point=(t, x), step=h, residual=None, skipped=True)

    values = [U.evaluate(p) for p in points]
    if any(not v.is_degenerate for v in values):
        # Only reachable when the locus predicate is inconsistent with the evaluator
        raise RuntimeError(ErrorMessages.LOCUS_INCONSISTENT)

    u_t_plus, u_t_minus, u_x_plus, u_x_minus, u = (v.lo for v in values)
    u_t = (u_t_plus - u_t_minus) / (2 * h)
    u_x = (u_x_plus - u_x_minus) / (2 * h)
    return ResidualReport(point=(t, x), step=h, residual=float(u_t + u * u_x), skipped=False)


def default_residual_points() -> List[Tuple[float, float]]:
    """
    The deterministic 1000-point residual sweep, kept clear of the fan apex.
    """
    times = np.concatenate([
        np.linspace(lo, hi, ResidualDefaults.SWEEP_T_PER_BAND)
        for lo, hi in ResidualDefaults.SWEEP_T_BANDS
    ])
    positions = np.linspace(*ResidualDefaults.SWEEP_X_RANGE, ResidualDefaults.SWEEP_X_COUNT)
    return [(float(t), float(x)) for t in times for x in positions]


# === Shock speed ===

def _locate_shock(U: AnalyticIntervalFunction, t) -> Tuple[float, Interval, Interval]:
    """
    Bisect for the point where U(t, .) leaves its left state.

    Returns:
        tuple: (shock position, left state, right state)
    """
    a, b = -(t + 1.0), t + 1.0
    left, right = U.evaluate((t, a)), U.evaluate((t, b))
    if not (left.is_degenerate and right.is_degenerate) or left == right:
        raise ValueError(ErrorMessages.NO_SHOCK_FOUND)

    for _ in range(ShockDefaults.BISECTION_MAX_ITERATIONS):
        if b - a <= ShockDefaults.BISECTION_TOLERANCE:
            break
        middle = (a + b) / 2
        value = U.evaluate((t, middle))
        if not value.is_degenerate:
            return middle, left, right
        if value == left:
            a = middle
        else:
            b = middle
    return (a + b) / 2, left, right


def shock_speed_check(t1, t2, U: Optional[AnalyticIntervalFunction] = None) -> float:
    """
    Measure the shock speed between two times by locating the shock at each.

    Args:
        t1, t2: Times with t2 > t1 >= 1
        U: Function of (t, x); defaults to the shock solution

    Returns:
        float: (x2 - x1) / (t2 - t1)

    Raises:
        ValueError: If the times are invalid or no shock is found
    """
    if not (t2 > t1 >= ShockDefaults.SHOCK_ONSET_TIME):
        raise ValueError(ErrorMessages.SHOCK_TIMES_INVALID)
    U = U or shock_solution()
    x1, _, _ = _locate_shock(U, t1)
    x2, _, _ = _locate_shock(U, t2)
    return (x2 - x1) / (t2 - t1)


def rankine_hugoniot_speed(t, U: Optional[AnalyticIntervalFunction] = None) -> float:
    """
    Jump-condition speed (U_left + U_right)/2 from the states on either side of the shock.
    """
    U = U or shock_solution()
    _, left, right = _locate_shock(U, t)
    return (left.lo + right.lo) / 2


# === Sweeps ===

def exact_grid(lo, hi, count: int) -> List[Fraction]:
    """count evenly spaced exact rationals from lo to hi inclusive."""
    if count < ShockDefaults.MIN_GRID_POINTS:
        raise ValueError(ErrorMessages.GRID_TOO_SMALL)
    lo, hi = Fraction(lo), Fraction(hi)
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def shock_sweep(t_max, nt: int, x_min, x_max, nx: int) -> Iterator[Tuple[Fraction, Fraction, Interval]]:
    """
    Evaluate the shock solution on an exact grid, row-major over (t, x).

    Raises:
        ValueError: If t_max <= 0, x_min >= x_max or a grid has fewer than 2 points
    """
    if not Fraction(t_max) > 0:
        raise ValueError(ErrorMessages.NON_POSITIVE_T_MAX)
    if not Fraction(x_min) < Fraction(x_max):
        raise ValueError(ErrorMessages.EMPTY_RANGE)
    times = exact_grid(0, t_max, nt)
    positions = exact_grid(x_min, x_max, nx)
    for t in times:
        for x in positions:
            yield t, x, shock_solution_eval(t, x)


def beta_sweep(x_min, x_max, n: int) -> Iterator[Tuple[Fraction, Fraction, Interval]]:
    """
    Evaluate beta on the square exact grid [x_min, x_max]^2, row-major over (x, y).

    Points refused by the origin guard are left out with a warning.
    """
    if not Fraction(x_min) < Fraction(x_max):
        raise ValueError(ErrorMessages.EMPTY_RANGE)
    grid = exact_grid(x_min, x_max, n)
    for x in grid:
        for y in grid:
            try:
                value = beta_eval(x, y)
            except DomainGuardError:
                logger.warning("Skipping beta at (%s, %s): too close to the origin", x, y)
                continue
            yield x, y, value
