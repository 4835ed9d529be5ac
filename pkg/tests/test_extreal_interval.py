"""
Tests for Extended Reals and Intervals Module

This module contains unit tests for extended real validation, the Interval
value type, width and modulus, and the two interval orders.

The order laws are checked with hypothesis over intervals drawn from a small
set of endpoints including both infinities.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import math
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.extreal_interval import (
    NEG_INF,
    POS_INF,
    Interval,
    interval_hull,
    interval_leq,
    interval_subset,
    is_finite,
    modulus,
    to_ext_real,
    width,
)


ENDPOINTS = st.sampled_from([NEG_INF, -3, -1, Fraction(-1, 2), 0, 0.25, 2, 7, POS_INF])


@st.composite
def intervals(draw):
    a, b = draw(ENDPOINTS), draw(ENDPOINTS)
    return Interval(min(a, b), max(a, b))


# === Extended reals ===

def test_to_ext_real_accepts_numbers_and_tokens():
    """
    Test that ints, floats, Fractions and infinity tokens are accepted.
    """
    # Act / Assert
    assert to_ext_real(3) == 3
    assert to_ext_real(-0.5) == -0.5
    assert to_ext_real(Fraction(1, 3)) == Fraction(1, 3)
    assert to_ext_real("+inf") == math.inf
    assert to_ext_real("inf") == math.inf
    assert to_ext_real("-inf") == -math.inf


@pytest.mark.parametrize("value", [math.nan, True, "ten", None])
def test_to_ext_real_rejects_invalid_values(value):
    """
    Test that NaN, booleans and non-numbers are rejected.
    """
    with pytest.raises(ValueError):
        to_ext_real(value)


def test_is_finite():
    assert is_finite(0)
    assert not is_finite(POS_INF)
    assert not is_finite(NEG_INF)


# === Interval construction ===

def test_interval_construction():
    """
    Test that a valid interval keeps its endpoints and tokens are normalized.
    """
    # Arrange / Act
    a = Interval(-1, 2)
    b = Interval("-inf", "+inf")

    # Assert
    assert (a.lo, a.hi) == (-1, 2)
    assert b.lo == -math.inf and b.hi == math.inf


def test_reversed_interval_is_rejected():
    """
    Test that lo > hi is rejected rather than swapped.
    """
    with pytest.raises(ValueError, match="out of order"):
        Interval(2, 1)


def test_interval_with_nan_is_rejected():
    with pytest.raises(ValueError):
        Interval(math.nan, 1)


def test_degenerate_interval():
    """
    Test point intervals and their string form.
    """
    # Arrange
    p = Interval.point(3)

    # Assert
    assert p.is_degenerate
    assert p == Interval(3, 3)
    assert str(p) == "3"
    assert str(Interval(-1, 1)) == "[-1, 1]"


def test_interval_is_immutable():
    a = Interval(0, 1)
    with pytest.raises(AttributeError):
        a.lo = -1


def test_contains():
    a = Interval(-1, 1)
    assert a.contains(0)
    assert a.contains(-1)
    assert not a.contains(1.5)


# === Width and modulus ===

@pytest.mark.parametrize("interval, expected", [
    (Interval(-1, 2), 3),
    (Interval.point(4), 0),
    (Interval(0, POS_INF), POS_INF),
    (Interval(NEG_INF, 0), POS_INF),
    (Interval(NEG_INF, POS_INF), POS_INF),
    (Interval.point(POS_INF), 0),
    (Interval.point(NEG_INF), 0),
])
def test_width(interval, expected):
    """
    Test width, including the conventions at infinity.
    """
    assert width(interval) == expected


@pytest.mark.parametrize("interval, expected", [
    (Interval(-3, 2), 3),
    (Interval(-1, 5), 5),
    (Interval.point(0), 0),
    (Interval(NEG_INF, 0), POS_INF),
])
def test_modulus(interval, expected):
    assert modulus(interval) == expected


# === Orders ===

def test_interval_leq_examples():
    """
    Test the endpoint order on a few fixed pairs.
    """
    assert interval_leq(Interval(0, 1), Interval(0, 2))
    assert interval_leq(Interval(-1, 1), Interval(0, 1))
    assert not interval_leq(Interval(0, 3), Interval(1, 2))
    assert not interval_leq(Interval(1, 2), Interval(0, 3))


def test_interval_subset_examples():
    assert interval_subset(Interval(0, 1), Interval(-1, 1))
    assert interval_subset(Interval.point(0), Interval(NEG_INF, POS_INF))
    assert not interval_subset(Interval(-1, 1), Interval(0, 1))


@given(intervals())
def test_orders_are_reflexive(a):
    assert interval_leq(a, a)
    assert interval_subset(a, a)


@given(intervals(), intervals())
def test_orders_are_antisymmetric(a, b):
    if interval_leq(a, b) and interval_leq(b, a):
        assert a == b
    if interval_subset(a, b) and interval_subset(b, a):
        assert a == b


@given(intervals(), intervals(), intervals())
def test_orders_are_transitive(a, b, c):
    if interval_leq(a, b) and interval_leq(b, c):
        assert interval_leq(a, c)
    if interval_subset(a, b) and interval_subset(b, c):
        assert interval_subset(a, c)


@given(intervals())
def test_width_is_zero_exactly_on_degenerate_intervals(a):
    assert width(a) >= 0
    assert (width(a) == 0) == a.is_degenerate


@given(intervals())
def test_modulus_is_largest_absolute_endpoint(a):
    expected = abs(a.hi) if abs(a.hi) >= abs(a.lo) else abs(a.lo)
    assert modulus(a) == expected
    assert modulus(a) >= 0


@given(st.lists(intervals(), min_size=1, max_size=5))
def test_hull_contains_every_interval(parts):
    """
    Test that the hull contains each of its parts and is attained by them.
    """
    # Act
    hull = interval_hull(parts)

    # Assert
    assert all(interval_subset(a, hull) for a in parts)
    assert hull.lo == min(a.lo for a in parts)
    assert hull.hi == max(a.hi for a in parts)


def test_hull_of_nothing_is_rejected():
    with pytest.raises(ValueError):
        interval_hull([])
