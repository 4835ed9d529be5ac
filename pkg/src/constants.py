"""
Hausdorff Intervals Constants Module

This module contains all constant values used throughout the application to avoid
magic numbers and improve code readability and maintainability.

Constants are organized into logical groups:
- Enumerations: operator names, witness kinds, dense comparison modes
- Numeric Defaults: estimator, residual, shock and guard settings
- Spec File Keys: keys of function spec and verdict documents
- CLI Constants: flag names, commands and exit codes
- File Operation Constants: file modes, extensions and CSV formatting
- Error Messages: standardized error messages
- Test Constants: trial counts, seeds and suite files

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import math
from enum import Enum


class OperatorName(Enum):
    """
    Names under which the cell-function operators are invoked.

    - LOWER: lower Baire operator I
    - UPPER: upper Baire operator S
    - COMPLETION: graph completion operator F = [I, S]
    """
    LOWER = "I"
    UPPER = "S"
    COMPLETION = "F"

    def __str__(self):
        """Return the string value when the enum is converted to string."""
        return self.value


class WitnessKind(Enum):
    """
    Reason a continuity check failed at its witness cell.
    """
    GRAPH_COMPLETION_MISMATCH = "graph-completion-mismatch"
    MINIMALITY_VIOLATION = "minimality-violation"
    NONE = "none"

    def __str__(self):
        """Return the string value when the enum is converted to string."""
        return self.value


class DenseMode(Enum):
    """
    Clauses of the dense-determination theorem, selected by the hypothesis
    they compare on the top-dimensional cells:

    - LOWER: lower endpoints ordered
    - UPPER: upper endpoints ordered
    - INTERVAL: intervals ordered
    - EQUAL: intervals equal
    """
    LOWER = "lower"
    UPPER = "upper"
    INTERVAL = "interval"
    EQUAL = "equal"

    def __str__(self):
        """Return the string value when the enum is converted to string."""
        return self.value


class CheckMode(Enum):
    """
    Continuity properties the CLI can check.
    """
    SEGMENT = "s"
    HAUSDORFF = "h"

    def __str__(self):
        """Return the string value when the enum is converted to string."""
        return self.value


class ExtRealConstants:
    """
    Extended real line tokens.
    """
    POS_INF = math.inf
    NEG_INF = -math.inf
    POS_INF_TOKEN = "+inf"
    NEG_INF_TOKEN = "-inf"
    # Accepted on input only
    PLAIN_INF_TOKEN = "inf"


class ComplexConstants:
    """
    Constants for cubical complexes and their cell codes.
    """
    SUPPORTED_DIMENSIONS = (1, 2)
    VERTEX_PREFIX = "v"
    EDGE_PREFIX = "e"
    AXIS_SEPARATOR = ","
    CELL_CODE_PATTERN = r"^([ve])(\d+)$"


class EstimatorDefaults:
    """
    Defaults of the numeric Baire estimator.
    """
    INITIAL_RADIUS = 0.5     # r0
    LEVELS = 20              # radii r0 * 2**-k for k = 0..LEVELS-1
    SAMPLES_PER_RADIUS = 64
    ANGLES_2D = 16           # 2-D pattern: ANGLES_2D angles x (samples / ANGLES_2D) radii
    TOLERANCE = 1e-9         # agreement of the last two levels
    RADIUS_SHRINK = 2.0
    MIN_LEVELS = 2


class ResidualDefaults:
    """
    Defaults for the finite-difference PDE residual of the shock solution.
    """
    STEP = 1e-3
    THRESHOLD = 1e-5
    GUARD_FACTOR = 2.0       # stencil points closer than GUARD_FACTOR * h to the singular set are skipped

    # Default sweep: two time bands kept clear of the fan apex at t = 1
    SWEEP_T_BANDS = ((0.02, 0.45), (1.5, 2.95))
    SWEEP_T_PER_BAND = 20
    SWEEP_X_RANGE = (-1.95, 1.95)
    SWEEP_X_COUNT = 25


class ShockDefaults:
    """
    Defaults for the shock solution sweeps and the shock speed measurement.
    """
    T_MAX = "2"
    NT = 201
    X_MIN = "-2"
    X_MAX = "2"
    NX = 401
    MIN_GRID_POINTS = 2
    SHOCK_ONSET_TIME = 1
    BISECTION_TOLERANCE = 1e-12
    BISECTION_MAX_ITERATIONS = 200


class GuardConstants:
    """
    Precision guards for the closed-form gallery evaluators.
    """
    BETA_ORIGIN_GUARD = 1e-12       # refuse 0 < x^2 + y^2 < guard
    BETA_LOCUS_RELATIVE_TOL = 1e-12  # |s - k*pi| <= tol * s puts (x, y) on a circle


class OracleLimits:
    """
    Limits of the brute-force minimality oracle.
    """
    MAX_CELLS = 9


class SpecKeys:
    """
    Keys used in function spec and verdict documents.
    """
    DIMENSION = "dimension"
    BREAKPOINTS = "breakpoints"
    VALUES = "values"
    CELL = "cell"
    VALUE = "value"

    S_CONTINUOUS = "s_continuous"
    H_CONTINUOUS = "h_continuous"
    WITNESS = "witness"
    WITNESS_KIND = "witness_kind"
    ORACLE = "oracle"
    ORACLE_AGREES = "oracle_agrees"


class ReportKeys:
    """
    Keys of the JSON reports printed by CLI commands.
    """
    OPERATOR = "operator"
    CELLS = "cells"
    CELLS_CHANGED = "cells_changed"
    MAX_WIDTH = "max_width"
    MEAN_WIDTH = "mean_width"
    OUTPUT = "output"
    CSV = "csv"
    ROWS = "rows"
    NONDEGENERATE_ROWS = "nondegenerate_rows"
    POINTS = "points"
    SKIPPED = "skipped"
    MAX_RESIDUAL = "max_residual"
    THRESHOLD = "threshold"
    STEP = "h"
    PASSED = "passed"
    SUITE = "suite"
    RETURN_CODE = "returncode"
    RESULTS_FILE = "results_file"
    FUNCTION = "function"
    POINT = "point"
    LOWER = "lower"
    UPPER = "upper"
    CONVERGED = "converged"
    LEVELS = "levels"
    ERROR = "error"


class CliConstants:
    """
    Command names, flag spellings and exit codes of the command-line front end.
    """
    PROG = "hausdorff-intervals"
    DESCRIPTION = "Calculus of interval-valued functions: Baire operators, graph completion and continuity checks."

    class Commands:
        """Sub-command names."""
        APPLY = "apply"
        CHECK = "check"
        SHOCK = "shock"
        RESIDUAL = "residual"
        BETA = "beta"
        ESTIMATE = "estimate"
        SUITE = "suite"

    class Flags:
        """One canonical spelling per flag."""
        INPUT = "--input"
        OUTPUT = "--output"
        OP = "--op"
        MODE = "--mode"
        WITH_ORACLE = "--with-oracle"
        T_MAX = "--t-max"
        NT = "--nt"
        X_MIN = "--x-min"
        X_MAX = "--x-max"
        NX = "--nx"
        H = "--h"
        CSV = "--csv"
        POINTS = "--points"
        NAME = "--name"
        FUNCTION = "--function"
        POINT = "--point"
        R0 = "--r0"
        LEVELS = "--levels"
        SAMPLES = "--samples"
        TOLERANCE = "--tolerance"

    class ExitCodes:
        """Exit-code contract."""
        SUCCESS = 0
        CHECK_FAILED = 1
        USAGE_ERROR = 2

    LOG_FORMAT = "%(levelname)s: %(message)s"


class FileConstants:
    """
    Constants related to file operations.
    """
    READ_MODE = 'r'
    WRITE_MODE = 'w'
    JSON_EXTENSION = '.json'
    ENCODING = 'utf-8'
    NEWLINE = '\n'
    JSON_INDENT = 2
    CSV_SIGNIFICANT_DIGITS = 17
    SHOCK_CSV_HEADER = ("t", "x", "lo", "hi")
    BETA_CSV_HEADER = ("x", "y", "lo", "hi")


class ErrorMessages:
    """
    Standardized error messages used throughout the application.
    """
    # Extended reals and intervals
    NAN_NOT_ALLOWED = "NaN is not an extended real number"
    BOOL_NOT_ALLOWED = "Booleans are not extended real numbers"
    INVALID_INTERVAL_JSON = "Interval must be a number, an infinity token or a [lo, hi] pair"
    EMPTY_HULL = "Cannot take the hull of no intervals"

    @staticmethod
    def not_ext_real(value) -> str:
        """Format error for a value that is not an extended real."""
        return f"Not an extended real number: {value!r}"

    @staticmethod
    def reversed_interval(lo, hi) -> str:
        """Format error for an interval whose endpoints are out of order."""
        return f"Interval endpoints out of order: lo={lo} > hi={hi}"

    # Complexes and cell functions
    UNSUPPORTED_DIMENSION = "Complex dimension must be 1 or 2"
    AXIS_COUNT_MISMATCH = "Number of breakpoint axes must equal the dimension"
    EMPTY_AXIS = "Every axis needs at least one breakpoint"
    UNSORTED_BREAKPOINTS = "Breakpoints must be strictly increasing"
    NON_FINITE_BREAKPOINT = "Breakpoints must be finite real numbers"
    MISMATCHED_COMPLEXES = "Functions are defined on different complexes"
    POINT_DIMENSION_MISMATCH = "Point has the wrong number of coordinates"

    @staticmethod
    def unknown_cell(cell) -> str:
        """Format error for a cell that does not belong to the complex."""
        return f"Cell {cell!r} does not belong to this complex"

    @staticmethod
    def invalid_cell_code(code) -> str:
        """Format error for an unparseable cell code."""
        return f"Invalid cell code: {code!r}"

    @staticmethod
    def missing_cells(codes) -> str:
        """Format error for cells without a value."""
        return f"Cells without a value: {', '.join(codes)}"

    @staticmethod
    def duplicate_cell(code) -> str:
        """Format error for a cell assigned twice."""
        return f"Cell assigned more than once: {code}"

    @staticmethod
    def not_top_cell(code) -> str:
        """Format error for a dense-set value given on a lower-dimensional cell."""
        return f"Cell {code} is not a top-dimensional cell"

    # Operators and estimator
    @staticmethod
    def unknown_operator(name) -> str:
        """Format error for an operator name outside {I, S, F}."""
        return f"Unknown operator {name!r}; expected one of I, S, F"

    NON_POSITIVE_RADIUS = "Initial radius must be positive"
    TOO_FEW_LEVELS = "The estimator needs at least 2 radius levels"
    TOO_FEW_SAMPLES = "Too few samples per radius for this dimension"
    ESTIMATE_ORDER = "Estimate lower bound exceeds upper bound"
    RADII_NOT_DECREASING = "Radii must be positive and strictly decreasing"
    POINT_OUTSIDE_DOMAIN = "Point lies outside the domain of the function"

    @staticmethod
    def invalid_evaluator_output(value) -> str:
        """Format error for an evaluator that did not return an Interval."""
        return f"Evaluator returned {value!r}, expected an Interval"

    # Continuity
    ORACLE_TOO_LARGE = "Brute-force oracle refuses complexes with more than 9 cells"
    HYPOTHESES_UNMET = "Dense comparison needs two H-continuous functions"
    WITNESS_INCONSISTENT = "A witness is present exactly when a check failed"
    H_WITHOUT_S = "H-continuity implies s-continuity"

    @staticmethod
    def unknown_mode(mode) -> str:
        """Format error for an unknown comparison or check mode."""
        return f"Unknown mode {mode!r}"

    # Gallery
    NEGATIVE_TIME = "The shock solution is defined for t >= 0 only"
    BETA_TOO_CLOSE_TO_ORIGIN = "beta cannot be resolved in floating point this close to the origin"
    NON_POSITIVE_STEP = "Finite-difference step must be positive"
    STENCIL_OUTSIDE_DOMAIN = "Finite-difference stencil leaves the domain"
    LOCUS_INCONSISTENT = "Nondegenerate value found away from the declared discontinuity locus"
    SHOCK_TIMES_INVALID = "Shock speed needs t2 > t1 >= 1"
    NO_SHOCK_FOUND = "No shock found: the one-sided states do not differ"
    GRID_TOO_SMALL = "Sweeps need at least 2 grid points per axis"
    NON_POSITIVE_T_MAX = "t_max must be positive"
    EMPTY_RANGE = "Sweep range must have x_min < x_max"

    @staticmethod
    def unknown_function(name) -> str:
        """Format error for a name outside the gallery."""
        return f"Unknown gallery function {name!r}"

    # Files
    @staticmethod
    def wrong_extension(extension) -> str:
        """Format error for a spec file with the wrong extension."""
        return f"File must have a {extension} extension"

    INVALID_POINTS_FILE = "Points file must hold a JSON list of [t, x] pairs"

    # Suites
    @staticmethod
    def unknown_suite(name) -> str:
        """Format error for an unknown test suite name."""
        return f"Unknown test suite {name!r}"


class Defaults:
    """
    Default values used when specific data is missing.
    """
    EMPTY_STRING = ""


class TestConstants:
    """
    Constants used for testing purposes and by the suite runner.
    """

    # Test file paths
    EXTREAL_INTERVAL_TEST = "tests/test_extreal_interval.py"
    CELL_COMPLEX_TEST = "tests/test_cell_complex.py"
    BAIRE_OPERATORS_TEST = "tests/test_baire_operators.py"
    CONTINUITY_TEST = "tests/test_continuity.py"
    GALLERY_TEST = "tests/test_gallery.py"
    FUNCTION_SPEC_IO_TEST = "tests/test_function_spec_io.py"
    RANDOM_FUNCTIONS_TEST = "tests/test_random_functions.py"
    CLI_TEST = "tests/test_cli.py"

    # Suite names accepted by the suite runner
    SUITES = {
        "intervals": (EXTREAL_INTERVAL_TEST,),
        "complex": (CELL_COMPLEX_TEST,),
        "operators": (BAIRE_OPERATORS_TEST,),
        "continuity": (CONTINUITY_TEST,),
        "gallery": (GALLERY_TEST,),
        "io": (FUNCTION_SPEC_IO_TEST, RANDOM_FUNCTIONS_TEST),
        "cli": (CLI_TEST,),
    }
    ALL_SUITES = "all"

    # Test output file
    TEST_RESULTS_FILE = "Test Results.txt"

    # Test command options
    PYTEST_COMMAND = "pytest"
    PYTEST_VERBOSE_FLAG = "-v"

    # Seeds for the deterministic trial loops
    OPERATOR_LAW_SEED = 20260419
    ORACLE_SEED = 1957
    DENSE_SEED = 1899
    RANDOM_HELPER_SEED = 7

    # Trial counts
    OPERATOR_LAW_TRIALS = 500
    ORACLE_TRIALS = 300
    DENSE_TRIALS = 500
    CONTINUITY_TRIALS = 200
    ALPHABET_SPOT_CHECKS = 40

    # Random instance bounds
    MAX_BREAKPOINTS_PER_AXIS = 7
    SMALL_ALPHABET_SIZE = 4
    EXAMPLE_SWEEP_VALUES = (-2, -1, 0, 1, 2)
    VALUE_POOL = (-3, -2, -1, 0, 1, 2, 3)

    # Point-valued step with a jump at 0
    STEP_LEFT = 0
    STEP_JUMP = 5
    STEP_RIGHT = 1

    # Estimator checks
    BETA_CIRCLES = 10
    BRACKET_TOLERANCE = 1e-6
    DEGENERATE_TOLERANCE = 1e-9
    SPEED_TOLERANCE = 1e-6
    BETA_LOCUS_MAX_K = 50
