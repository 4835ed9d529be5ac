"""
Function Spec Reader and Writers

This module reads and writes the structured text formats of the application:
- Function spec files (JSON): dimension, breakpoints and one value per cell
- Verdict and report documents (JSON)
- Sweep data (CSV, 17 significant digits, LF line endings)

Extended reals are written as decimal literals, with the infinities as the
strings "-inf" and "+inf". Intervals are [lo, hi] pairs; degenerate
intervals are written as a bare number.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import csv
import json
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from src.cell_complex import CellIntervalFunction, build_complex
from src.constants import Defaults, ErrorMessages, ExtRealConstants, FileConstants, SpecKeys
from src.extreal_interval import ExtReal, Interval, to_ext_real


def ext_real_to_json(value: ExtReal):
    """JSON form of an extended real: a number, or "+inf" / "-inf"."""
    if value == math.inf:
        return ExtRealConstants.POS_INF_TOKEN
    if value == -math.inf:
        return ExtRealConstants.NEG_INF_TOKEN
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    return value


def interval_to_json(value: Interval):
    """JSON form of an interval: a bare number when degenerate, else [lo, hi]."""
    if value.is_degenerate:
        return ext_real_to_json(value.lo)
    return [ext_real_to_json(value.lo), ext_real_to_json(value.hi)]


def interval_from_json(data) -> Interval:
    """
    Parse an interval from its JSON form.

    Raises:
        ValueError: If the data is neither a number/token nor a two-element list
    """
    if isinstance(data, list):
        if len(data) != 2:
            raise ValueError(ErrorMessages.INVALID_INTERVAL_JSON)
        return Interval(to_ext_real(data[0]), to_ext_real(data[1]))
    return Interval.point(to_ext_real(data))


def format_number(value: ExtReal) -> str:
    """CSV form of an extended real: 17 significant digits, or "+inf" / "-inf"."""
    if value == math.inf:
        return ExtRealConstants.POS_INF_TOKEN
    if value == -math.inf:
        return ExtRealConstants.NEG_INF_TOKEN
    return format(float(value), f".{FileConstants.CSV_SIGNIFICANT_DIGITS}g")


def function_to_document(f: CellIntervalFunction) -> Dict:
    """The function spec document of a cell function."""
    complex_ = f.complex
    return {
        SpecKeys.DIMENSION: complex_.dimension,
        SpecKeys.BREAKPOINTS: [[ext_real_to_json(b) for b in axis] for axis in complex_.grid_lines],
        SpecKeys.VALUES: [
            {SpecKeys.CELL: complex_.cell_code(c), SpecKeys.VALUE: interval_to_json(v)}
            for c, v in f.items()
        ],
    }


def function_from_document(document: Dict) -> CellIntervalFunction:
    """
    Build a cell function from a function spec document.

    Raises:
        KeyError: If a required key is missing or a cell is unknown
        ValueError: If breakpoints, cell codes or values are invalid, or a
            cell is missing or listed twice
    """
    complex_ = build_complex(document[SpecKeys.DIMENSION], document[SpecKeys.BREAKPOINTS])
    values = {}
    for entry in document[SpecKeys.VALUES]:
        cell = complex_.parse_cell_code(entry[SpecKeys.CELL])
        if cell in values:
            raise ValueError(ErrorMessages.duplicate_cell(entry[SpecKeys.CELL]))
        values[cell] = interval_from_json(entry[SpecKeys.VALUE])
    return CellIntervalFunction(complex_, values)


def _check_extension(filename: str) -> None:
    if not str(filename).lower().endswith(FileConstants.JSON_EXTENSION):
        raise ValueError(ErrorMessages.wrong_extension(FileConstants.JSON_EXTENSION))


def load_function_spec(filename) -> CellIntervalFunction:
    """
    Load a cell function from a function spec file.

    Args:
        filename (str): Path to the JSON file

    Returns:
        CellIntervalFunction: The function

    Raises:
        ValueError: If the file is not a JSON file or the function spec is invalid
        FileNotFoundError: If the file does not exist
        json.JSONDecodeError: If the JSON is invalid
    """
    _check_extension(filename)
    with open(filename, FileConstants.READ_MODE, encoding=FileConstants.ENCODING) as f:
        document = json.load(f)
    return function_from_document(document)


def dumps_document(document) -> str:
    """Deterministic JSON text of a document, LF-terminated."""
    return json.dumps(document, indent=FileConstants.JSON_INDENT) + FileConstants.NEWLINE


def save_function_spec(f: CellIntervalFunction, filename) -> None:
    """Write a cell function as a function spec file."""
    _check_extension(filename)
    with open(filename, FileConstants.WRITE_MODE, encoding=FileConstants.ENCODING,
              newline=FileConstants.NEWLINE) as out:
        out.write(dumps_document(function_to_document(f)))


def load_points(filename) -> List[Tuple[float, float]]:
    """
    Load a JSON list of [t, x] pairs.

    Raises:
        ValueError: If the file does not hold a list of numeric pairs
    """
    _check_extension(filename)
    with open(filename, FileConstants.READ_MODE, encoding=FileConstants.ENCODING) as f:
        data = json.load(f)
    if not isinstance(data, list):
        raise ValueError(ErrorMessages.INVALID_POINTS_FILE)
    points = []
    for pair in data:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(ErrorMessages.INVALID_POINTS_FILE)
        points.append((float(to_ext_real(pair[0])), float(to_ext_real(pair[1]))))
    return points


def write_interval_csv(filename, header: Sequence[str],
                       rows: Iterable[Tuple[ExtReal, ExtReal, Interval]]) -> Tuple[int, int]:
    """
    Write sweep rows (coordinate, coordinate, value) as CSV.

    Args:
        filename (str): Output path
        header: Column names, e.g. ("t", "x", "lo", "hi")
        rows: (first coordinate, second coordinate, interval) triples

    Returns:
        tuple: (rows written, rows with a nondegenerate value)
    """
    count = 0
    nondegenerate = 0
    with open(filename, FileConstants.WRITE_MODE, encoding=FileConstants.ENCODING,
              newline=Defaults.EMPTY_STRING) as out:
        writer = csv.writer(out, lineterminator=FileConstants.NEWLINE)
        writer.writerow(header)
        for first, second, value in rows:
            writer.writerow([format_number(first), format_number(second),
                             format_number(value.lo), format_number(value.hi)])
            count += 1
            if not value.is_degenerate:
                nondegenerate += 1
    return count, nondegenerate
