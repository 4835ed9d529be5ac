"""
Command-Line Front End

Provides the commands of the application:
- apply:    apply the operator I, S or F to a function spec file
- check:    check s- or H-continuity, optionally against the brute-force oracle
- shock:    sweep the shock wave solution to CSV
- beta:     sweep beta to CSV
- residual: finite-difference PDE residual of the shock solution
- estimate: numeric Baire estimate of alpha, beta or the shock solution at a point
- suite:    run the property test suites

Every command prints one JSON report on stdout; notes go to stderr.
Exit codes: 0 success or check passed, 1 check failed, 2 usage or input error.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np

from src.baire_operators import apply_operator, numeric_baire_estimate
from src.constants import (
    CheckMode,
    CliConstants,
    EstimatorDefaults,
    FileConstants,
    OperatorName,
    ReportKeys,
    ResidualDefaults,
    ShockDefaults,
    SpecKeys,
    TestConstants,
)
from src.continuity import brute_force_h_oracle, is_h_continuous, is_s_continuous
from src.extreal_interval import width
from src.function_spec_io import (
    dumps_document,
    ext_real_to_json,
    load_function_spec,
    load_points,
    save_function_spec,
    write_interval_csv,
)
from src.gallery import (
    GALLERY_FUNCTIONS,
    beta_sweep,
    default_residual_points,
    gallery_function,
    pde_residual,
    shock_solution,
    shock_sweep,
)
from src.test_runner import run_suite


logger = logging.getLogger(__name__)

ExitCodes = CliConstants.ExitCodes


@dataclass(frozen=True)
class CommandOutcome:
    """
    Result of a command: its exit code and the report printed on stdout.
    """

    exit_code: int
    report: Dict = field(default_factory=dict)


def cmd_apply(input_path: str, operator_name: str, output_path: str) -> CommandOutcome:
    """
    Apply an operator to a function spec and write the result.

    The report counts changed cells and summarises the widths of the result.
    """
    f = load_function_spec(input_path)
    result = apply_operator(f, operator_name)
    save_function_spec(result, output_path)

    widths = [width(v) for v in result.values()]
    changed = sum(1 for c in f.complex.cells if f[c] != result[c])
    report = {
        ReportKeys.OPERATOR: str(OperatorName(operator_name)),
        ReportKeys.CELLS: len(widths),
        ReportKeys.CELLS_CHANGED: changed,
        ReportKeys.MAX_WIDTH: ext_real_to_json(max(widths)),
        ReportKeys.MEAN_WIDTH: ext_real_to_json(float(np.mean(np.array(widths, dtype=float)))),
        ReportKeys.OUTPUT: str(output_path),
    }
    return CommandOutcome(ExitCodes.SUCCESS, report)


def cmd_check(input_path: str, mode: str, with_oracle: bool = False) -> CommandOutcome:
    """
    Check s- or H-continuity of a function spec.

    Exit code 0 iff the property holds. The report always carries the H
    verdict. With the oracle, the brute-force minimality verdict and its
    agreement with the H verdict are added.
    """
    f = load_function_spec(input_path)
    mode = CheckMode(mode)
    h_verdict = is_h_continuous(f)
    if mode is CheckMode.SEGMENT:
        verdict = is_s_continuous(f)
        holds = verdict.s_continuous
    else:
        verdict = h_verdict
        holds = verdict.h_continuous

    report = verdict.to_document()
    # The s verdict alone never certifies H-continuity
    report[SpecKeys.H_CONTINUOUS] = h_verdict.h_continuous
    if with_oracle:
        oracle = brute_force_h_oracle(f)
        report[SpecKeys.ORACLE] = oracle
        report[SpecKeys.ORACLE_AGREES] = oracle == h_verdict.h_continuous
        if oracle != h_verdict.h_continuous:
            logger.error("Oracle disagrees with the endpoint characterization")

    return CommandOutcome(ExitCodes.SUCCESS if holds else ExitCodes.CHECK_FAILED, report)


def cmd_shock(t_max, nt: int, x_min, x_max, nx: int, csv_path: str) -> CommandOutcome:
    """Write the (t, x, lo, hi) sweep of the shock solution."""
    rows, nondegenerate = write_interval_csv(
        csv_path, FileConstants.SHOCK_CSV_HEADER, shock_sweep(t_max, nt, x_min, x_max, nx))
    logger.info("Wrote %d rows to %s", rows, csv_path)
    return CommandOutcome(ExitCodes.SUCCESS, {
        ReportKeys.CSV: str(csv_path),
        ReportKeys.ROWS: rows,
        ReportKeys.NONDEGENERATE_ROWS: nondegenerate,
    })


def cmd_beta(x_min, x_max, nx: int, csv_path: str) -> CommandOutcome:
    """Write the (x, y, lo, hi) sweep of beta on a square grid."""
    rows, nondegenerate = write_interval_csv(
        csv_path, FileConstants.BETA_CSV_HEADER, beta_sweep(x_min, x_max, nx))
    logger.info("Wrote %d rows to %s", rows, csv_path)
    return CommandOutcome(ExitCodes.SUCCESS, {
        ReportKeys.CSV: str(csv_path),
        ReportKeys.ROWS: rows,
        ReportKeys.NONDEGENERATE_ROWS: nondegenerate,
    })


def cmd_residual(points_path: Optional[str] = None, h: float = ResidualDefaults.STEP) -> CommandOutcome:
    """
    Maximum PDE residual of the shock solution over a points file or the default sweep.

    Exit code 0 iff the maximum over non-skipped points is below 1e-5.
    """
    points = load_points(points_path) if points_path else default_residual_points()
    U = shock_solution()
    reports = [pde_residual(U, t, x, h) for t, x in points]
    residuals = np.array([abs(r.residual) for r in reports if not r.skipped], dtype=float)
    max_residual = float(residuals.max()) if residuals.size else 0.0
    passed = max_residual < ResidualDefaults.THRESHOLD

    return CommandOutcome(ExitCodes.SUCCESS if passed else ExitCodes.CHECK_FAILED, {
        ReportKeys.POINTS: len(reports),
        ReportKeys.SKIPPED: len(reports) - int(residuals.size),
        ReportKeys.STEP: h,
        ReportKeys.MAX_RESIDUAL: max_residual,
        ReportKeys.THRESHOLD: ResidualDefaults.THRESHOLD,
        ReportKeys.PASSED: passed,
    })


def cmd_estimate(name: str, point: List[float],
                 r0: float = EstimatorDefaults.INITIAL_RADIUS,
                 levels: int = EstimatorDefaults.LEVELS,
                 samples: int = EstimatorDefaults.SAMPLES_PER_RADIUS,
                 tolerance: float = EstimatorDefaults.TOLERANCE) -> CommandOutcome:
    """
    Numeric Baire estimate of a gallery function at a point.

    Exit code 0 iff the last two radius levels agreed.
    """
    estimate = numeric_baire_estimate(gallery_function(name), point, r0, levels, samples, tolerance)
    return CommandOutcome(ExitCodes.SUCCESS if estimate.converged else ExitCodes.CHECK_FAILED, {
        ReportKeys.FUNCTION: name,
        ReportKeys.POINT: list(estimate.point),
        ReportKeys.LOWER: ext_real_to_json(estimate.lower),
        ReportKeys.UPPER: ext_real_to_json(estimate.upper),
        ReportKeys.CONVERGED: estimate.converged,
        ReportKeys.LEVELS: len(estimate.radii_used),
    })


def cmd_suite(name: str) -> CommandOutcome:
    """Run a named property suite with pytest."""
    returncode = run_suite(name)
    return CommandOutcome(ExitCodes.SUCCESS if returncode == 0 else ExitCodes.CHECK_FAILED, {
        ReportKeys.SUITE: name,
        ReportKeys.RETURN_CODE: returncode,
        ReportKeys.RESULTS_FILE: TestConstants.TEST_RESULTS_FILE,
    })


def _grid_count(text: str) -> int:
    value = int(text)
    if value < ShockDefaults.MIN_GRID_POINTS:
        raise argparse.ArgumentTypeError(f"needs at least {ShockDefaults.MIN_GRID_POINTS} points")
    return value


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one sub-command per command."""
    flags = CliConstants.Flags
    commands = CliConstants.Commands
    parser = argparse.ArgumentParser(prog=CliConstants.PROG, description=CliConstants.DESCRIPTION)
    subparsers = parser.add_subparsers(dest="command", required=True)

    apply_parser = subparsers.add_parser(commands.APPLY, help="apply I, S or F to a function spec")
    apply_parser.add_argument(flags.INPUT, required=True)
    apply_parser.add_argument(flags.OP, required=True, choices=[str(op) for op in OperatorName])
    apply_parser.add_argument(flags.OUTPUT, required=True)

    check_parser = subparsers.add_parser(commands.CHECK, help="check s- or H-continuity")
    check_parser.add_argument(flags.INPUT, required=True)
    check_parser.add_argument(flags.MODE, required=True, choices=[str(m) for m in CheckMode])
    check_parser.add_argument(flags.WITH_ORACLE, action="store_true")

    shock_parser = subparsers.add_parser(commands.SHOCK, help="sweep the shock solution to CSV")
    shock_parser.add_argument(flags.T_MAX, type=Fraction, default=Fraction(ShockDefaults.T_MAX))
    shock_parser.add_argument(flags.NT, type=_grid_count, default=ShockDefaults.NT)
    shock_parser.add_argument(flags.X_MIN, type=Fraction, default=Fraction(ShockDefaults.X_MIN))
    shock_parser.add_argument(flags.X_MAX, type=Fraction, default=Fraction(ShockDefaults.X_MAX))
    shock_parser.add_argument(flags.NX, type=_grid_count, default=ShockDefaults.NX)
    shock_parser.add_argument(flags.CSV, required=True)

    beta_parser = subparsers.add_parser(commands.BETA, help="sweep beta to CSV")
    beta_parser.add_argument(flags.X_MIN, type=Fraction, default=Fraction(ShockDefaults.X_MIN))
    beta_parser.add_argument(flags.X_MAX, type=Fraction, default=Fraction(ShockDefaults.X_MAX))
    beta_parser.add_argument(flags.NX, type=_grid_count, default=ShockDefaults.NX)
    beta_parser.add_argument(flags.CSV, required=True)

    residual_parser = subparsers.add_parser(commands.RESIDUAL, help="PDE residual of the shock solution")
    residual_parser.add_argument(flags.POINTS, default=None)
    residual_parser.add_argument(flags.H, type=float, default=ResidualDefaults.STEP)

    estimate_parser = subparsers.add_parser(commands.ESTIMATE, help="numeric Baire estimate of a gallery function")
    estimate_parser.add_argument(flags.FUNCTION, required=True, choices=list(GALLERY_FUNCTIONS))
    estimate_parser.add_argument(flags.POINT, required=True, type=float, nargs="+")
    estimate_parser.add_argument(flags.R0, type=float, default=EstimatorDefaults.INITIAL_RADIUS)
    estimate_parser.add_argument(flags.LEVELS, type=int, default=EstimatorDefaults.LEVELS)
    estimate_parser.add_argument(flags.SAMPLES, type=int, default=EstimatorDefaults.SAMPLES_PER_RADIUS)
    estimate_parser.add_argument(flags.TOLERANCE, type=float, default=EstimatorDefaults.TOLERANCE)

    suite_parser = subparsers.add_parser(commands.SUITE, help="run property test suites")
    suite_parser.add_argument(flags.NAME, default=TestConstants.ALL_SUITES,
                              choices=[*TestConstants.SUITES, TestConstants.ALL_SUITES])
    return parser


def dispatch(args: argparse.Namespace) -> CommandOutcome:
    """Run the command selected by parsed arguments."""
    commands = CliConstants.Commands
    if args.command == commands.APPLY:
        return cmd_apply(args.input, args.op, args.output)
    if args.command == commands.CHECK:
        return cmd_check(args.input, args.mode, args.with_oracle)
    if args.command == commands.SHOCK:
        return cmd_shock(args.t_max, args.nt, args.x_min, args.x_max, args.nx, args.csv)
    if args.command == commands.BETA:
        return cmd_beta(args.x_min, args.x_max, args.nx, args.csv)
    if args.command == commands.RESIDUAL:
        return cmd_residual(args.points, args.h)
    if args.command == commands.ESTIMATE:
        return cmd_estimate(args.function, args.point, args.r0, args.levels, args.samples, args.tolerance)
    return cmd_suite(args.name)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run the command and print its report.

    Returns:
        int: The exit code
    """
    logging.basicConfig(level=logging.INFO, format=CliConstants.LOG_FORMAT, stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ExitCodes.SUCCESS if exc.code == 0 else ExitCodes.USAGE_ERROR

    try:
        outcome = dispatch(args)
    except (ValueError, KeyError, TypeError, OSError) as exc:
        # Covers malformed JSON and a refused oracle, both ValueError subclasses
        logger.error("%s", exc)
        outcome = CommandOutcome(ExitCodes.USAGE_ERROR, {ReportKeys.ERROR: str(exc)})

    sys.stdout.write(dumps_document(outcome.report))
    return outcome.exit_code
