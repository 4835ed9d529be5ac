"""
Segment and Hausdorff Continuity

This module decides s-continuity (f is a fixed point of the graph
completion operator) and H-continuity (s-continuous and minimal among the
s-continuous functions contained in it) for cell functions.

H-continuity is decided through the endpoint characterization: an
s-continuous f is H-continuous iff completing its lower endpoint function
and completing its upper endpoint function both give back f. A brute-force
minimality oracle enumerates candidate subfunctions on small complexes and
is used to cross-check the characterization.

The dense-determination facilities treat the top-dimensional cells as the
dense subset: extend_from_dense builds a function from its top-cell values,
and dense_compare evaluates a comparison on the top cells only.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence

from src.baire_operators import graph_completion
from src.cell_complex import CellId, CellIntervalFunction, CubicalComplex, require_same_complex, pointwise_leq
from src.constants import DenseMode, ErrorMessages, OracleLimits, SpecKeys, WitnessKind
from src.extreal_interval import ExtReal, Interval, interval_hull, interval_leq, interval_subset


logger = logging.getLogger(__name__)


class OracleRefusedError(ValueError):
    """Raised when the brute-force oracle is asked to enumerate a complex that is too large."""


@dataclass(frozen=True)
class ContinuityVerdict:
    """
    Outcome of a continuity check.

    Attributes:
        s_continuous: Whether F(f) = f
        h_continuous: Whether f is also minimal
        witness: Canonical code of the first failing cell, or None
        witness_kind: Which condition failed there
    """

    s_continuous: bool
    h_continuous: bool
    witness: Optional[str] = None
    witness_kind: WitnessKind = WitnessKind.NONE

    def __post_init__(self):
        if self.h_continuous and not self.s_continuous:
            raise ValueError(ErrorMessages.H_WITHOUT_S)
        if (self.witness is None) != (self.witness_kind is WitnessKind.NONE):
            raise ValueError(ErrorMessages.WITNESS_INCONSISTENT)

    def to_document(self) -> Dict:
        """The verdict as an ordered JSON-ready dictionary."""
        return {
            SpecKeys.S_CONTINUOUS: self.s_continuous,
            SpecKeys.H_CONTINUOUS: self.h_continuous,
            SpecKeys.WITNESS: self.witness,
            SpecKeys.WITNESS_KIND: str(self.witness_kind),
        }


def is_s_continuous(f: CellIntervalFunction) -> ContinuityVerdict:
    """
    Check whether f is segment-continuous, i.e. F(f) = f.

    Since f(c) is always contained in F(f)(c), it suffices to find a cell
    where F(f)(c) is not contained in f(c). The first such cell in canonical
    order is the witness.
    """
    completed = graph_completion(f)
    for c in f.complex.cells:
        if not interval_subset(completed[c], f[c]):
            return ContinuityVerdict(
                s_continuous=False,
                h_continuous=False,
                witness=f.complex.cell_code(c),
                witness_kind=WitnessKind.GRAPH_COMPLETION_MISMATCH,
            )
    return ContinuityVerdict(s_continuous=True, h_continuous=False, witness=None)


def _minimality_witness(f: CellIntervalFunction) -> Optional[CellId]:
    lower, upper = f.lower_endpoint(), f.upper_endpoint()
    from_lower = graph_completion(lower)
    from_upper = graph_completion(upper)
    for c in f.complex.cells:
        if from_lower[c] != f[c] or from_upper[c] != f[c]:
            return c
    return None


def is_h_continuous(f: CellIntervalFunction) -> ContinuityVerdict:
    """
    Check whether f is Hausdorff-continuous.

    f must be s-continuous, and the graph completions of its lower and upper
    endpoint functions must both equal f. When the second condition fails,
    F(lower endpoint) or F(upper endpoint) is an s-continuous function
    strictly inside f, so f is not minimal.
    """
    verdict = is_s_continuous(f)
    if not verdict.s_continuous:
        return verdict
    cell = _minimality_witness(f)
    if cell is not None:
        return ContinuityVerdict(
            s_continuous=True,
            h_continuous=False,
            witness=f.complex.cell_code(cell),
            witness_kind=WitnessKind.MINIMALITY_VIOLATION,
        )
    return ContinuityVerdict(s_continuous=True, h_continuous=True)


def is_piecewise_continuous(f: CellIntervalFunction) -> bool:
    """
    True when f is point-valued and every value equals the values on its star.
    """
    complex_ = f.complex
    for c in complex_.cells:
        if not f[c].is_degenerate:
            return False
        if any(f[d] != f[c] for d in complex_.star_cells(c)):
            return False
    return True


def endpoint_alphabet(f: CellIntervalFunction) -> List[ExtReal]:
    """Sorted distinct endpoints occurring in the values of f."""
    return sorted({v.lo for v in f.values()} | {v.hi for v in f.values()})


def brute_force_h_oracle(f: CellIntervalFunction, alphabet: Optional[Sequence[ExtReal]] = None) -> bool:
    """
    Decide H-continuity by enumerating candidate subfunctions.

    Every g with g(c) contained in f(c) and endpoints drawn from the alphabet
    is considered; f is H-continuous iff it is s-continuous and no such g other
    than f is s-continuous. Cells are assigned top-dimensional first so the
    inclusion form of s-continuity (g(d) inside g(c) for d in the star of c)
    prunes partial assignments; every complete candidate is confirmed with
    the graph completion operator.

    Args:
        f (CellIntervalFunction): The function, on a complex with at most 9 cells
        alphabet: Candidate endpoints; defaults to the endpoints of f

    Returns:
        bool: True iff f is H-continuous by the minimality definition

    Raises:
        OracleRefusedError: If the complex has more than 9 cells
    """
    complex_ = f.complex
    if len(complex_) > OracleLimits.MAX_CELLS:
        raise OracleRefusedError(ErrorMessages.ORACLE_TOO_LARGE)
    if graph_completion(f) != f:
        return False

    points = sorted(set(endpoint_alphabet(f) if alphabet is None else alphabet))
    order = sorted(complex_.cells, key=lambda c: -complex_.cell_dimension(c))
    candidates = {}
    for c in order:
        options = [Interval(lo, hi) for i, lo in enumerate(points) for hi in points[i:]
                   if interval_subset(Interval(lo, hi), f[c])]
        # Narrow candidates first: a strictly smaller selection shows up early
        candidates[c] = sorted(options, key=lambda a: (a.hi - a.lo if a.lo != a.hi else 0, a.lo))
    logger.debug("Oracle enumerating %s candidate values over %d cells",
                 [len(candidates[c]) for c in order], len(order))

    # Higher-dimensional cells whose star contains c, already assigned when c is reached
    above = {c: [d for d in complex_.star_cells(c) if d != c] for c in order}
    assignment: Dict[CellId, Interval] = {}

    def search(position: int) -> bool:
        if position == len(order):
            g = CellIntervalFunction(complex_, assignment)
            return g != f and graph_completion(g) == g
        cell = order[position]
        for option in candidates[cell]:
            if all(interval_subset(assignment[d], option) for d in above[cell]):
                assignment[cell] = option
                if search(position + 1):
                    return True
                del assignment[cell]
        return False

    return not search(0)


def extend_from_dense(complex_: CubicalComplex, top_values: Mapping) -> CellIntervalFunction:
    """
    Extend values given on the top-dimensional cells to the whole complex.

    Each lower-dimensional cell receives the hull of the top-cell values in
    its star. The result is s-continuous; with point values on the top cells
    it is H-continuous.

    Args:
        complex_ (CubicalComplex): The complex
        top_values: Interval per top cell, keyed by cell id or cell code

    Returns:
        CellIntervalFunction: The extension

    Raises:
        ValueError: If a top cell has no value or a key is not a top cell
    """
    values: Dict[CellId, Interval] = {}
    for key, value in top_values.items():
        cell = complex_.parse_cell_code(key) if isinstance(key, str) else tuple(key)
        if cell not in complex_ or not complex_.is_top_cell(cell):
            raise ValueError(ErrorMessages.not_top_cell(key))
        values[cell] = value
    missing = [c for c in complex_.top_cells if c not in values]
    if missing:
        raise ValueError(ErrorMessages.missing_cells(complex_.cell_code(c) for c in missing))

    for c in complex_.cells:
        if c not in values:
            values[c] = interval_hull(values[d] for d in complex_.star_cells(c) if complex_.is_top_cell(d))
    return CellIntervalFunction(complex_, values)


def _dense_relation(mode: DenseMode):
    relations = {
        DenseMode.LOWER: lambda a, b: a.lo <= b.lo,
        DenseMode.UPPER: lambda a, b: a.hi <= b.hi,
        DenseMode.INTERVAL: interval_leq,
        DenseMode.EQUAL: lambda a, b: a == b,
    }
    try:
        return relations[DenseMode(str(mode))]
    except ValueError:
        raise ValueError(ErrorMessages.unknown_mode(mode)) from None


def dense_compare(f: CellIntervalFunction, g: CellIntervalFunction, mode) -> bool:
    """
    Evaluate a comparison between two H-continuous functions on the top cells.

    The modes select the hypotheses of the dense-determination theorem:
    lower (lower endpoints ordered), upper (upper endpoints ordered),
    interval (values ordered) and equal (values equal). When the hypothesis
    holds on the top cells, the theorem gives f <= g (or f = g for the equal
    mode) on every cell; see dense_conclusion_holds.

    Raises:
        ValueError: If the complexes differ, the mode is unknown, or either
            function is not H-continuous
    """
    require_same_complex(f, g)
    relation = _dense_relation(mode)
    if not (is_h_continuous(f).h_continuous and is_h_continuous(g).h_continuous):
        raise ValueError(ErrorMessages.HYPOTHESES_UNMET)
    return all(relation(f[c], g[c]) for c in f.complex.top_cells)


def dense_conclusion_holds(f: CellIntervalFunction, g: CellIntervalFunction, mode) -> bool:
    """Global conclusion of the selected clause: f = g for equal, f <= g otherwise."""
    if DenseMode(str(mode)) is DenseMode.EQUAL:
        require_same_complex(f, g)
        return f == g
    return pointwise_leq(f, g)
