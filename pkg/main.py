"""
NumRange Toolkit - Main Entry Point
Command-line front end: matrix files in, certified quantities, bound tables,
boundary samples and plots, suite runs and the worked examples out.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 precondition or shape failure.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import pandas as pd

from config.settings import Settings
from evaluation.verify_harness import examples_passed, paper_examples, run_suite
from observability.logger import nr_logger
from tools.block_builder import BlockSpec, partition
from tools.bounds_catalog import BoundEvaluation, attach_targets, bounds_catalog
from tools.errors import MatrixParseError, NumRangeError
from tools.matrix_core import ComplexMatrix, is_zero, min_norm, op_norm, require_square, spectral_radius
from tools.matrix_io import load_matrix
from tools.range_analysis import crawford_number, numerical_radius, range_boundary
from tools.range_plot import render_svg

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3

BOUND_COLUMNS = ["bound_id", "direction", "value", "reference", "slack", "applicable"]


# ============================================================================
# Argument types
# ============================================================================


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def dim_list(text: str) -> List[int]:
    """Comma-separated positive dimensions, e.g. 2,3,4,8"""
    dims = [positive_int(part.strip()) for part in text.split(",") if part.strip()]
    if not dims:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of dimensions, got {text!r}")
    return dims


def _load_square(path: str) -> ComplexMatrix:
    t = load_matrix(path)
    require_square(t, Path(path).name)
    return t


def _emit_json(data) -> None:
    sys.stdout.write(json.dumps(data, indent=2) + "\n")


# ============================================================================
# Commands
# ============================================================================


@nr_logger.trace_workflow("cli.compute")
def cmd_compute(args: argparse.Namespace) -> int:
    t = _load_square(args.file)
    quantities = {
        "w": numerical_radius(t, tol=args.tol),
        "m": crawford_number(t, tol=args.tol),
        "c": min_norm(t),
        "r": spectral_radius(t),
        "norm": op_norm(t),
    }

    if args.json:
        _emit_json(
            {
                "file": str(args.file),
                "shape": list(t.shape),
                "tol": args.tol,
                "quantities": {name: value.summary() for name, value in quantities.items()},
            }
        )
        return EXIT_OK

    frame = pd.DataFrame(
        [
            {"quantity": name, "value": repr(q.value), "lower": repr(q.lower), "upper": repr(q.upper)}
            for name, q in quantities.items()
        ]
    )
    sys.stdout.write(frame.to_string(index=False) + "\n")
    return EXIT_OK


def _zero_rows(spec: BlockSpec, first: int) -> bool:
    return all(is_zero(spec.block(i, j)) for i in range(first, spec.n) for j in range(spec.n))


def block_evaluations(t: ComplexMatrix, rows: int, cols: int, tol: float) -> List[BoundEvaluation]:
    """Every block bound whose structural precondition the partition of T meets"""
    spec = partition(t, rows, cols)
    evaluations = [bounds_catalog.grid_upper(spec)]
    if spec.n > 1 and _zero_rows(spec, 1):
        evaluations.append(bounds_catalog.firstrow_upper([spec.block(0, j) for j in range(spec.n)]))
    if spec.n == 2:
        a, b, c, d = spec.block(0, 0), spec.block(0, 1), spec.block(1, 0), spec.block(1, 1)
        evaluations += bounds_catalog.two_by_two_bounds(a, b, c, d, tol)
        if _zero_rows(spec, 1):
            evaluations += bounds_catalog.row_bounds(a, b, tol)
        if is_zero(a) and is_zero(d):
            evaluations += bounds_catalog.offdiag_lower(b, c, tol)
            evaluations.append(bounds_catalog.antidiag_lower([b, c], tol))
    return evaluations


def bounds_frame(evaluations: Sequence[BoundEvaluation]) -> pd.DataFrame:
    return pd.DataFrame([{column: getattr(e, column) for column in BOUND_COLUMNS} for e in evaluations], columns=BOUND_COLUMNS)


@nr_logger.trace_workflow("cli.bounds")
def cmd_bounds(args: argparse.Namespace) -> int:
    t = _load_square(args.file)
    blocks = block_evaluations(t, args.blocks[0], args.blocks[1], args.tol) if args.blocks else []
    w_ref = numerical_radius(t, tol=args.tol)
    evaluations = attach_targets(list(bounds_catalog.scalar_bounds(t, args.tol)) + blocks, w_ref.value)

    frame = bounds_frame(evaluations)
    if args.csv:
        frame.to_csv(sys.stdout, index=False, lineterminator="\n")
    elif args.json:
        _emit_json(
            {
                "file": str(args.file),
                "w": w_ref.summary(),
                "bounds": [e.model_dump(mode="json", exclude={"terms"}) for e in evaluations],
            }
        )
    else:
        sys.stdout.write(f"w(T) = {w_ref.value!r}  [{w_ref.lower!r}, {w_ref.upper!r}]\n")
        sys.stdout.write(frame.to_string(index=False) + "\n")
    return EXIT_OK


def _range_header(boundary) -> str:
    if boundary.shape == "point":
        return f"# degenerate: point {boundary.endpoints[0]!r}\n"
    if boundary.shape == "segment":
        start, end = boundary.endpoints
        return f"# degenerate: segment {start!r} {end!r}\n"
    return "# shape: region\n"


@nr_logger.trace_workflow("cli.range")
def cmd_range(args: argparse.Namespace) -> int:
    t = _load_square(args.file)
    boundary = range_boundary(t, args.samples)

    sys.stdout.write(_range_header(boundary))
    frame = pd.DataFrame([s.model_dump() for s in boundary.samples], columns=["theta", "re", "im", "support"])
    frame.to_csv(sys.stdout, index=False, lineterminator="\n")

    if args.svg:
        render_svg(boundary, Path(args.file).name, args.svg)
        nr_logger.log_action("cli.range", "SVG_WRITTEN", {"path": str(args.svg)})
    return EXIT_OK


@nr_logger.trace_workflow("cli.verify")
def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(
        trials=args.trials,
        dims=args.dims,
        seed=args.seed,
        tol=args.tol,
        workers=args.workers,
    )

    if args.json:
        data = report.model_dump(mode="json")
        data["passed"] = report.passed
        _emit_json(data)
    else:
        sys.stdout.write(
            f"trials={report.trials} dims={','.join(map(str, report.dims))} seed={report.seed} "
            f"checks={report.checks} pointwise_draws={report.pointwise_draws} "
            f"equality_attained={report.equality_attained} violations={len(report.violations)}\n"
        )
        tightness = pd.DataFrame([t.model_dump(mode="json") for t in report.tightness])
        sys.stdout.write(tightness.to_string(index=False) + "\n")
        for v in report.violations:
            sys.stdout.write(f"VIOLATION {v.bound_id} slack={v.slack!r} scale={v.scale!r} {v.fingerprint}\n")
        sys.stdout.write("PASSED\n" if report.passed else "FAILED\n")
    return EXIT_OK if report.passed else EXIT_FAILED


@nr_logger.trace_workflow("cli.examples")
def cmd_examples(args: argparse.Namespace) -> int:
    rows = paper_examples()
    passed = examples_passed(rows)
    if args.json:
        _emit_json({"rows": [row.model_dump(mode="json") for row in rows], "passed": passed})
    else:
        frame = pd.DataFrame([row.model_dump() for row in rows])
        with pd.option_context("display.float_format", "{:.7f}".format):
            sys.stdout.write(frame.to_string(index=False) + "\n")
    return EXIT_OK if passed else EXIT_FAILED


# ============================================================================
# Parser
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numrange",
        description="Certified numerical-range quantities and numerical-radius bounds",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr (-v info, -vv debug)")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="w, m, c, r and the norm of a matrix")
    compute.add_argument("file")
    compute.add_argument("--tol", type=positive_float, default=Settings.DEFAULT_TOL)
    compute.add_argument("--json", action="store_true")
    compute.set_defaults(handler=cmd_compute)

    bounds = commands.add_parser("bounds", help="catalog bounds on w(T) with slack")
    bounds.add_argument("file")
    bounds.add_argument("--blocks", nargs=2, type=positive_int, metavar=("R", "C"))
    bounds.add_argument("--tol", type=positive_float, default=Settings.DEFAULT_TOL)
    fmt = bounds.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    bounds.set_defaults(handler=cmd_bounds)

    range_ = commands.add_parser("range", help="boundary samples of W(T) as CSV")
    range_.add_argument("file")
    range_.add_argument("--samples", type=positive_int, default=Settings.BOUNDARY_SAMPLES)
    range_.add_argument("--svg", type=Path)
    range_.set_defaults(handler=cmd_range)

    verify = commands.add_parser("verify", help="fuzz every catalog inequality")
    verify.add_argument("--trials", type=positive_int, default=Settings.DEFAULT_TRIALS)
    verify.add_argument("--dims", type=dim_list, default=list(Settings.DEFAULT_DIMS))
    verify.add_argument("--seed", type=int, default=Settings.DEFAULT_SEED)
    verify.add_argument("--tol", type=positive_float, default=Settings.SLACK_TOL)
    verify.add_argument("--workers", type=positive_int, default=1)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    examples = commands.add_parser("examples", help="reproduce the worked numerical examples")
    examples.add_argument("--json", action="store_true")
    examples.set_defaults(handler=cmd_examples)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return int(e.code or 0)

    Settings.validate()
    if args.verbose:
        nr_logger.set_level("DEBUG" if args.verbose > 1 else "INFO")

    try:
        return args.handler(args)
    except MatrixParseError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except NumRangeError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_PRECONDITION
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
