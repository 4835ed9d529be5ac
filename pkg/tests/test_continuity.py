"""
Tests for Continuity Module

This module contains tests for the s- and H-continuity checks, the
brute-force minimality oracle, the extension of top-cell data and the
dense comparison of H-continuous functions.

The step-function examples are checked exhaustively over small endpoint
sweeps; the oracle equivalence and dense determination are checked over
seeded random instances.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import itertools
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.baire_operators import graph_completion
from src.cell_complex import CellIntervalFunction, build_complex, pointwise_leq
from src.constants import DenseMode, TestConstants, WitnessKind
from src.continuity import (
    ContinuityVerdict,
    OracleRefusedError,
    brute_force_h_oracle,
    dense_compare,
    dense_conclusion_holds,
    endpoint_alphabet,
    extend_from_dense,
    is_h_continuous,
    is_piecewise_continuous,
    is_s_continuous,
)
from src.extreal_interval import Interval
from src.gallery import make_alpha, make_interval_step, make_step
from src.random_functions import (
    random_alphabet,
    random_cell_function,
    random_complex,
    random_h_pair,
    random_s_continuous,
    random_small_complex,
)


SWEEP = TestConstants.EXAMPLE_SWEEP_VALUES


@pytest.fixture
def line():
    return build_complex(1, [[0]])


# === s-continuity ===

def test_jump_step_is_not_s_continuous():
    """
    Test that the step (0, 5, 1) fails at the vertex.
    """
    # Act
    verdict = is_s_continuous(make_step(TestConstants.STEP_LEFT, TestConstants.STEP_JUMP,
                                        TestConstants.STEP_RIGHT))

    # Assert
    assert not verdict.s_continuous
    assert not verdict.h_continuous
    assert verdict.witness == "v0"
    assert verdict.witness_kind is WitnessKind.GRAPH_COMPLETION_MISMATCH


def test_interval_step_is_s_continuous():
    verdict = is_s_continuous(make_interval_step(0, Interval(-1, 2), 1))
    assert verdict.s_continuous
    assert verdict.witness is None


def test_constant_is_s_continuous(line):
    f = CellIntervalFunction.constant(line, Interval(-2, 3))
    assert is_s_continuous(f).s_continuous


def test_interval_step_sweep():
    """
    Test the interval step (a, [b, c], d) over the full endpoint sweep:
    s-continuous iff b <= min(a, d) and max(a, d) <= c, and then
    H-continuous iff b = min(a, d) and c = max(a, d).
    """
    for a, b, c, d in itertools.product(SWEEP, repeat=4):
        if b > c:
            continue
        # Arrange
        f = make_interval_step(a, Interval(b, c), d)

        # Act
        s_verdict = is_s_continuous(f)
        h_verdict = is_h_continuous(f)

        # Assert
        assert s_verdict.s_continuous == (graph_completion(f) == f)
        assert s_verdict.s_continuous == (b <= min(a, d) and max(a, d) <= c)
        if s_verdict.s_continuous:
            assert h_verdict.h_continuous == (b == min(a, d) and c == max(a, d))
            if a <= d:
                assert h_verdict.h_continuous == (a == b and c == d)


def test_point_step_is_s_continuous_only_when_constant():
    """
    Test that a point-valued step (a, b, c) is s-continuous iff a = b = c.
    """
    for a, b, c in itertools.product(SWEEP, repeat=3):
        f = make_step(a, b, c)
        assert is_s_continuous(f).s_continuous == (a == b == c)
        assert is_piecewise_continuous(f) == (a == b == c)


def test_point_valued_s_continuity_is_piecewise_continuity():
    """
    Test on random point-valued functions that s-continuity equals piecewise continuity.
    """
    rng = random.Random(TestConstants.RANDOM_HELPER_SEED)
    for _ in range(TestConstants.CONTINUITY_TRIALS):
        complex_ = random_complex(rng, max_breakpoints=3)
        # Two values make continuous instances common
        f = random_cell_function(rng, complex_, alphabet=(0, 1), degenerate=True)
        if rng.random() < 0.3:
            f = CellIntervalFunction.constant(complex_, f[complex_.cells[0]])
        assert is_s_continuous(f).s_continuous == is_piecewise_continuous(f)


def test_piecewise_continuity_needs_point_values(line):
    assert not is_piecewise_continuous(CellIntervalFunction.constant(line, Interval(0, 1)))


def test_witness_is_first_failing_cell_in_canonical_order():
    """
    Test that the witness of a 2-D failure is the first failing cell.
    """
    # Arrange
    complex_ = build_complex(2, [[0], [0]])
    f = CellIntervalFunction.constant(complex_, Interval.point(0))
    f = f.with_values({complex_.parse_cell_code("e1,e1"): Interval.point(1)})

    # Act
    verdict = is_s_continuous(f)

    # Assert: v0,v0 precedes v0,e1 and e1,v0
    assert verdict.witness == "v0,v0"


# === H-continuity ===

def test_alpha_is_h_continuous():
    verdict = is_h_continuous(make_alpha())
    assert verdict.s_continuous and verdict.h_continuous
    assert verdict.witness_kind is WitnessKind.NONE


def test_constant_unit_interval_is_not_h_continuous(line):
    """
    Test that [0, 1] everywhere is s-continuous but not minimal.
    """
    # Arrange
    f = CellIntervalFunction.constant(line, Interval(0, 1))

    # Act
    verdict = is_h_continuous(f)

    # Assert
    assert verdict.s_continuous
    assert not verdict.h_continuous
    assert verdict.witness == "e0"
    assert verdict.witness_kind is WitnessKind.MINIMALITY_VIOLATION


@pytest.mark.parametrize("a, b, c, d, expected", [
    (0, 0, 1, 1, True),
    (0, -1, 1, 1, False),
    (0, 0, 2, 1, False),
])
def test_two_sided_step_h_continuity(a, b, c, d, expected):
    f = make_interval_step(a, Interval(b, c), d)
    assert is_s_continuous(f).s_continuous
    assert is_h_continuous(f).h_continuous == expected


def test_h_continuity_implies_s_continuity():
    rng = random.Random(TestConstants.RANDOM_HELPER_SEED)
    for _ in range(TestConstants.CONTINUITY_TRIALS):
        complex_ = random_complex(rng, max_breakpoints=3)
        f = random_cell_function(rng, complex_)
        verdict = is_h_continuous(f)
        if verdict.h_continuous:
            assert verdict.s_continuous


def test_verdict_invariants_are_checked():
    with pytest.raises(ValueError):
        ContinuityVerdict(s_continuous=False, h_continuous=True)
    with pytest.raises(ValueError):
        ContinuityVerdict(s_continuous=False, h_continuous=False, witness=None,
                          witness_kind=WitnessKind.GRAPH_COMPLETION_MISMATCH)


def test_verdict_document_field_order():
    document = is_s_continuous(make_step(0, 5, 1)).to_document()
    assert list(document) == ["s_continuous", "h_continuous", "witness", "witness_kind"]
    assert document["witness_kind"] == "graph-completion-mismatch"


# === Brute-force oracle ===

def test_oracle_on_examples(line):
    """
    Test the oracle on alpha, the constant [0, 1] and the two-sided step.
    """
    assert brute_force_h_oracle(make_alpha())
    assert not brute_force_h_oracle(CellIntervalFunction.constant(line, Interval(0, 1)))
    assert brute_force_h_oracle(make_interval_step(0, Interval(0, 1), 1))


def test_oracle_rejects_non_s_continuous_input():
    assert not brute_force_h_oracle(make_step(0, 5, 1))


def test_oracle_refuses_large_complexes():
    """
    Test that a complex with more than 9 cells is refused.
    """
    # Arrange
    complex_ = build_complex(1, [[0, 1, 2, 3, 4]])
    f = CellIntervalFunction.constant(complex_, Interval.point(0))

    # Act / Assert
    with pytest.raises(OracleRefusedError):
        brute_force_h_oracle(f)


def test_oracle_agrees_with_endpoint_characterization():
    """
    Test that the endpoint characterization matches the minimality oracle
    on seeded random s-continuous functions.
    """
    rng = random.Random(TestConstants.ORACLE_SEED)
    agreements = {True: 0, False: 0}
    for _ in range(TestConstants.ORACLE_TRIALS):
        # Arrange
        complex_ = random_small_complex(rng)
        alphabet = random_alphabet(rng, rng.randint(2, TestConstants.SMALL_ALPHABET_SIZE))
        f = random_s_continuous(rng, complex_, alphabet)

        # Act
        verdict = is_h_continuous(f)
        oracle = brute_force_h_oracle(f)

        # Assert
        assert verdict.s_continuous
        assert verdict.h_continuous == oracle, repr(f)
        agreements[oracle] += 1

    # Both outcomes must be exercised
    assert agreements[True] > 0 and agreements[False] > 0


def test_oracle_alphabet_widened_with_midpoints():
    """
    Test that adding midpoints to the candidate alphabet never changes the verdict.
    """
    rng = random.Random(TestConstants.ORACLE_SEED + 1)
    for _ in range(TestConstants.ALPHABET_SPOT_CHECKS):
        complex_ = random_small_complex(rng)
        f = random_s_continuous(rng, complex_, random_alphabet(rng, 3))
        points = endpoint_alphabet(f)
        midpoints = [Fraction(a + b, 2) for a, b in zip(points, points[1:])]
        assert brute_force_h_oracle(f, points + midpoints) == brute_force_h_oracle(f)


# === Dense determination ===

def test_extend_alpha_from_top_cells(line):
    """
    Test that -1 and 1 on the two half-lines extend to alpha.
    """
    # Act
    f = extend_from_dense(line, {"e0": Interval.point(-1), "e1": Interval.point(1)})

    # Assert
    assert f == make_alpha()


def test_extend_constant(line):
    f = extend_from_dense(line, {(0,): Interval.point(4), (2,): Interval.point(4)})
    assert f == CellIntervalFunction.constant(line, Interval.point(4))


def test_extend_half_planes():
    """
    Test that the 2-D half-plane data gives [-1, 1] on the middle line only.
    """
    # Arrange
    complex_ = build_complex(2, [[0], [0]])
    top_values = {c: Interval.point(-1 if c[0] == 0 else 1) for c in complex_.top_cells}

    # Act
    f = extend_from_dense(complex_, top_values)

    # Assert
    assert f[complex_.parse_cell_code("v0,e0")] == Interval(-1, 1)
    assert f[complex_.parse_cell_code("v0,v0")] == Interval(-1, 1)
    assert f[complex_.parse_cell_code("v0,e1")] == Interval(-1, 1)
    assert f[complex_.parse_cell_code("e0,v0")] == Interval.point(-1)
    assert f[complex_.parse_cell_code("e1,v0")] == Interval.point(1)
    assert is_h_continuous(f).h_continuous


def test_extend_rejects_missing_or_lower_cells(line):
    with pytest.raises(ValueError):
        extend_from_dense(line, {"e0": Interval.point(0)})
    with pytest.raises(ValueError):
        extend_from_dense(line, {"e0": Interval.point(0), "e1": Interval.point(0),
                                 "v0": Interval.point(0)})


def test_extension_is_s_continuous():
    rng = random.Random(TestConstants.DENSE_SEED + 1)
    for _ in range(TestConstants.CONTINUITY_TRIALS):
        complex_ = random_complex(rng)
        top_values = {}
        for c in complex_.top_cells:
            a, b = rng.choice(TestConstants.VALUE_POOL), rng.choice(TestConstants.VALUE_POOL)
            top_values[c] = Interval(min(a, b), max(a, b))
        assert is_s_continuous(extend_from_dense(complex_, top_values)).s_continuous


def test_dense_compare_examples(line):
    """
    Test equal alpha pairs and alpha against a raised step.
    """
    # Arrange
    alpha = make_alpha()
    raised = extend_from_dense(line, {"e0": Interval.point(0), "e1": Interval.point(2)})

    # Act / Assert
    assert dense_compare(alpha, make_alpha(), DenseMode.EQUAL)
    assert dense_conclusion_holds(alpha, make_alpha(), DenseMode.EQUAL)
    assert dense_compare(alpha, raised, "lower")
    assert pointwise_leq(alpha, raised)
    assert not dense_compare(raised, alpha, "upper")


def test_dense_compare_rejects_non_h_continuous(line):
    f = CellIntervalFunction.constant(line, Interval(0, 1))
    with pytest.raises(ValueError):
        dense_compare(f, make_alpha(), DenseMode.INTERVAL)


def test_dense_compare_rejects_unknown_mode():
    with pytest.raises(ValueError):
        dense_compare(make_alpha(), make_alpha(), "sideways")


def test_dense_determination_on_random_pairs():
    """
    Test that whenever a comparison holds on the top cells of two random
    H-continuous functions, its conclusion holds on every cell.
    """
    rng = random.Random(TestConstants.DENSE_SEED)
    hypotheses_met = {mode: 0 for mode in DenseMode}
    for _ in range(TestConstants.DENSE_TRIALS):
        # Arrange
        complex_ = random_complex(rng, max_breakpoints=4)
        f, g = random_h_pair(rng, complex_)

        for mode in DenseMode:
            # Act
            hypothesis = dense_compare(f, g, mode)

            # Assert
            if hypothesis:
                hypotheses_met[mode] += 1
                assert dense_conclusion_holds(f, g, mode), (mode, repr(f), repr(g))

    assert all(count > 0 for count in hypotheses_met.values())
