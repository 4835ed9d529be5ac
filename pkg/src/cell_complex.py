"""
Cubical Cell Complexes and Cell Interval Functions

This module models a box-shaped open domain in one or two dimensions as a
regular cubical complex induced by per-axis breakpoints, and interval-valued
functions that are constant on every cell.

A cell is identified by a tuple of per-axis positions. On an axis with k
breakpoints there are 2k + 1 positions: even positions 2i are the open edges
e<i> (e0 and e<k> are unbounded) and odd positions 2i + 1 are the vertices
v<i> at the breakpoints. Because the outer edges are unbounded the complex
covers the whole plane (or line) and has no boundary.

The star of a cell c is the set of cells whose closure contains c. For a
function that is constant on cells, the infimum and supremum over any small
enough neighbourhood of a point of c are the minimum and maximum over the
star of c.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import itertools
import math
import re
from bisect import bisect_left
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from src.constants import ComplexConstants, ErrorMessages
from src.extreal_interval import ExtReal, Interval, interval_leq, to_ext_real, width


CellId = Tuple[int, ...]


def _validate_axis(breakpoints: Sequence) -> Tuple[ExtReal, ...]:
    axis = tuple(to_ext_real(b) for b in breakpoints)
    if not axis:
        raise ValueError(ErrorMessages.EMPTY_AXIS)
    if any(isinstance(b, float) and math.isinf(b) for b in axis):
        raise ValueError(ErrorMessages.NON_FINITE_BREAKPOINT)
    if any(left >= right for left, right in zip(axis, axis[1:])):
        raise ValueError(ErrorMessages.UNSORTED_BREAKPOINTS)
    return axis


class CubicalComplex:
    """
    Regular cubical decomposition of the line or the plane.

    Cells are enumerated in canonical order: the geometric order of per-axis
    positions, first axis most significant. Stars and closures are computed
    once at construction; the complex is immutable afterwards.
    """

    def __init__(self, dimension: int, grid_lines: Sequence[Sequence]):
        if dimension not in ComplexConstants.SUPPORTED_DIMENSIONS:
            raise ValueError(ErrorMessages.UNSUPPORTED_DIMENSION)
        if len(grid_lines) != dimension:
            raise ValueError(ErrorMessages.AXIS_COUNT_MISMATCH)

        self._dimension = dimension
        self._grid_lines = tuple(_validate_axis(axis) for axis in grid_lines)
        self._positions = tuple(2 * len(axis) + 1 for axis in self._grid_lines)
        self._cells: Tuple[CellId, ...] = tuple(
            itertools.product(*(range(n) for n in self._positions))
        )
        self._index = {cell: i for i, cell in enumerate(self._cells)}
        self._stars: Dict[CellId, Tuple[CellId, ...]] = {
            cell: self._compute_star(cell) for cell in self._cells
        }

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def grid_lines(self) -> Tuple[Tuple[ExtReal, ...], ...]:
        return self._grid_lines

    @property
    def cells(self) -> Tuple[CellId, ...]:
        return self._cells

    def __len__(self):
        return len(self._cells)

    def __contains__(self, cell) -> bool:
        return cell in self._index

    def __eq__(self, other):
        if not isinstance(other, CubicalComplex):
            return NotImplemented
        return self._dimension == other._dimension and self._grid_lines == other._grid_lines

    def __hash__(self):
        return hash((self._dimension, self._grid_lines))

    def __repr__(self):
        return f"CubicalComplex(dimension={self._dimension}, grid_lines={self._grid_lines!r})"

    def _check_cell(self, cell: CellId) -> None:
        if cell not in self._index:
            raise KeyError(ErrorMessages.unknown_cell(cell))

    def _compute_star(self, cell: CellId) -> Tuple[CellId, ...]:
        # A vertex position sees itself and both neighbouring edges; an edge only itself
        choices = []
        for pos in cell:
            if pos % 2 == 1:
                choices.append((pos - 1, pos, pos + 1))
            else:
                choices.append((pos,))
        return tuple(itertools.product(*choices))

    def cell_dimension(self, cell: CellId) -> int:
        """Number of axes along which the cell is an open edge."""
        self._check_cell(cell)
        return sum(1 for pos in cell if pos % 2 == 0)

    def is_top_cell(self, cell: CellId) -> bool:
        return self.cell_dimension(cell) == self._dimension

    @property
    def top_cells(self) -> Tuple[CellId, ...]:
        """Top-dimensional cells: an open dense subset of the domain."""
        return tuple(c for c in self._cells if all(pos % 2 == 0 for pos in c))

    def star(self, cell: CellId) -> FrozenSet[CellId]:
        """
        Cells whose closure contains the given cell, the cell included.

        Args:
            cell (CellId): A cell of this complex

        Returns:
            frozenset: The star of the cell

        Raises:
            KeyError: If the cell does not belong to the complex
        """
        self._check_cell(cell)
        return frozenset(self._stars[cell])

    def star_cells(self, cell: CellId) -> Tuple[CellId, ...]:
        """The star as a tuple in canonical order."""
        self._check_cell(cell)
        return self._stars[cell]

    def closure(self, cell: CellId) -> FrozenSet[CellId]:
        """The cell together with all of its lower-dimensional faces."""
        self._check_cell(cell)
        choices = []
        for pos, count in zip(cell, self._positions):
            if pos % 2 == 0:
                choices.append(tuple(p for p in (pos - 1, pos, pos + 1) if 0 <= p < count))
            else:
                choices.append((pos,))
        return frozenset(itertools.product(*choices))

    def locate(self, point: Sequence) -> CellId:
        """
        Map a point to the unique cell containing it.

        Coordinates equal to a breakpoint land on the vertex position of that
        axis. Comparison is exact.

        Args:
            point: One coordinate per axis

        Returns:
            CellId: The containing cell
        """
        if len(point) != self._dimension:
            raise ValueError(ErrorMessages.POINT_DIMENSION_MISMATCH)
        cell = []
        for coordinate, axis in zip(point, self._grid_lines):
            coordinate = to_ext_real(coordinate)
            i = bisect_left(axis, coordinate)
            if i < len(axis) and axis[i] == coordinate:
                cell.append(2 * i + 1)
            else:
                cell.append(2 * i)
        return tuple(cell)

    def cell_code(self, cell: CellId) -> str:
        """Canonical code of a cell, e.g. "v0" or "e1,v0"."""
        self._check_cell(cell)
        parts = []
        for pos in cell:
            if pos % 2 == 1:
                parts.append(f"{ComplexConstants.VERTEX_PREFIX}{pos // 2}")
            else:
                parts.append(f"{ComplexConstants.EDGE_PREFIX}{pos // 2}")
        return ComplexConstants.AXIS_SEPARATOR.join(parts)

    def parse_cell_code(self, code: str) -> CellId:
        """
        Inverse of cell_code.

        Raises:
            ValueError: If the code is malformed
            KeyError: If the code names a cell outside the complex
        """
        parts = str(code).split(ComplexConstants.AXIS_SEPARATOR)
        if len(parts) != self._dimension:
            raise ValueError(ErrorMessages.invalid_cell_code(code))
        cell = []
        for part in parts:
            match = re.match(ComplexConstants.CELL_CODE_PATTERN, part.strip())
            if not match:
                raise ValueError(ErrorMessages.invalid_cell_code(code))
            index = int(match.group(2))
            if match.group(1) == ComplexConstants.VERTEX_PREFIX:
                cell.append(2 * index + 1)
            else:
                cell.append(2 * index)
        cell = tuple(cell)
        self._check_cell(cell)
        return cell


def build_complex(dimension: int, grid_lines: Sequence[Sequence]) -> CubicalComplex:
    """
    Build the cubical complex induced by per-axis breakpoints.

    Args:
        dimension (int): 1 or 2
        grid_lines: One strictly increasing, non-empty breakpoint list per axis

    Returns:
        CubicalComplex: The complex with prod(2k_i + 1) cells

    Raises:
        ValueError: If the dimension is unsupported or breakpoints are unsorted,
            duplicated or missing
    """
    return CubicalComplex(dimension, grid_lines)


class CellIntervalFunction:
    """
    An interval-valued function that is constant on every cell of a complex.

    The value map is total: every cell has exactly one Interval.
    """

    def __init__(self, complex_: CubicalComplex, values: Mapping[CellId, Interval]):
        missing = [c for c in complex_.cells if c not in values]
        if missing:
            raise ValueError(ErrorMessages.missing_cells(complex_.cell_code(c) for c in missing))
        extra = [c for c in values if c not in complex_]
        if extra:
            raise KeyError(ErrorMessages.unknown_cell(extra[0]))
        for value in values.values():
            if not isinstance(value, Interval):
                raise TypeError(ErrorMessages.invalid_evaluator_output(value))
        self._complex = complex_
        self._values: Dict[CellId, Interval] = {c: values[c] for c in complex_.cells}

    @classmethod
    def constant(cls, complex_: CubicalComplex, value: Interval) -> "CellIntervalFunction":
        """The function taking the same value on every cell."""
        return cls(complex_, {c: value for c in complex_.cells})

    @classmethod
    def from_endpoints(cls, lower: "CellIntervalFunction",
                       upper: "CellIntervalFunction") -> "CellIntervalFunction":
        """Recompose [lower, upper] cellwise from two point-valued functions."""
        require_same_complex(lower, upper)
        return cls(lower.complex, {
            c: Interval(lower[c].lo, upper[c].hi) for c in lower.complex.cells
        })

    @property
    def complex(self) -> CubicalComplex:
        return self._complex

    def __getitem__(self, cell: CellId) -> Interval:
        if cell not in self._values:
            raise KeyError(ErrorMessages.unknown_cell(cell))
        return self._values[cell]

    def items(self) -> Iterable[Tuple[CellId, Interval]]:
        """(cell, value) pairs in canonical cell order."""
        return self._values.items()

    def values(self) -> List[Interval]:
        return list(self._values.values())

    def value_at(self, point: Sequence) -> Interval:
        """Value of the function at a point of the domain."""
        return self._values[self._complex.locate(point)]

    def lower_endpoint(self) -> "CellIntervalFunction":
        """The point-valued function of lower endpoints."""
        return CellIntervalFunction(self._complex, {
            c: Interval.point(v.lo) for c, v in self._values.items()
        })

    def upper_endpoint(self) -> "CellIntervalFunction":
        """The point-valued function of upper endpoints."""
        return CellIntervalFunction(self._complex, {
            c: Interval.point(v.hi) for c, v in self._values.items()
        })

    def with_values(self, updates: Mapping[CellId, Interval]) -> "CellIntervalFunction":
        """A copy with some cell values replaced."""
        values = dict(self._values)
        values.update(updates)
        return CellIntervalFunction(self._complex, values)

    def __eq__(self, other):
        if not isinstance(other, CellIntervalFunction):
            return NotImplemented
        return self._complex == other._complex and self._values == other._values

    def __hash__(self):
        return hash((self._complex, tuple(self._values.items())))

    def __repr__(self):
        body = ", ".join(f"{self._complex.cell_code(c)}: {v}" for c, v in self._values.items())
        return f"CellIntervalFunction({{{body}}})"


def require_same_complex(f: CellIntervalFunction, g: CellIntervalFunction) -> None:
    if f.complex != g.complex:
        raise ValueError(ErrorMessages.MISMATCHED_COMPLEXES)


def pointwise_leq(f: CellIntervalFunction, g: CellIntervalFunction) -> bool:
    """
    Pointwise order on cell functions: f <= g iff f(c) <= g(c) for every cell.

    Raises:
        ValueError: If the functions live on different complexes
    """
    require_same_complex(f, g)
    return all(interval_leq(f[c], g[c]) for c in f.complex.cells)


def endpoint_decomposition(f: CellIntervalFunction) -> Tuple[CellIntervalFunction, CellIntervalFunction]:
    """
    Split f into its lower and upper endpoint functions.

    Returns:
        tuple: (lower, upper), point-valued, with lower <= f <= upper
    """
    return f.lower_endpoint(), f.upper_endpoint()


def is_point_valued(f: CellIntervalFunction) -> bool:
    """True when every cell value has width 0."""
    return all(width(v) == 0 for v in f.values())
