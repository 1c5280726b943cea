"""
Command-line front end.

    python gradestab.py COMMAND [--json] [-f FILE]

COMMAND is one of count, coeffs, cesaro, module, hn, phi, hecke, optimize,
compare, cone or verify-examples. The problem file is read from FILE or from
standard input; for verify-examples FILE overrides the expected-value fixture.
Reports go to stdout (an aligned table, or JSON with --json) and logs to stderr.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 internal invariant violation.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

import pandas as pd
from pydantic import ValidationError

from core.constants import (
    EXIT_INPUT,
    EXIT_INVARIANT,
    EXIT_OK,
    EXIT_VERIFICATION,
    LOG_LEVEL,
)
from core.logic.errors import InputValidationError, InvariantViolation, VerificationFailure
from models.problem import ProblemFile
from models.report import Report
from routes.helpers import error_report
from routes.services import VERIFY_COMMAND, command_names, get_service_worker

logger = logging.getLogger("gradestab")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradestab",
        description="Exact invariants of graded modules, HN filtrations and Hecke-transform descent.",
    )
    parser.add_argument("command", choices=command_names(), help="Command to run")
    parser.add_argument("--json", action="store_true", help="Emit the JSON report instead of a table")
    parser.add_argument(
        "-f", "--file", default=None,
        help="Problem file (default: stdin); the expected-value fixture for verify-examples",
    )
    return parser


def read_problem(path: Optional[str]) -> ProblemFile:
    """
    Raises:
        InputValidationError: If the file cannot be read
        ValidationError: If the content is not a valid problem file
    """
    if path is None:
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputValidationError(f"cannot read problem file {path}: {e}") from e
    return ProblemFile.model_validate_json(text)


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, separators=(",", ":"))


def render_table(report: Report) -> str:
    """Two aligned columns: one row per output, then one per descent step."""
    rows = [("command", report.command), ("status", report.status)]
    rows += [(key, _cell(value)) for key, value in report.outputs.items()]
    for i, step in enumerate(report.trace, start=1):
        rows.append((
            f"step {i}",
            f"{_cell(step['before'])} -> {_cell(step['after'])}; "
            f"phi {step['phi_before']} -> {step['phi_after']}",
        ))
    df = pd.DataFrame(rows, columns=["key", "value"])
    return df.to_string(index=False, justify="left")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=LOG_LEVEL,
        stream=sys.stderr,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )

    worker = get_service_worker()
    problem = None
    try:
        if args.command != VERIFY_COMMAND:
            problem = read_problem(args.file)
        report = worker.run(args.command, problem, fixture=args.file)
    except VerificationFailure as e:
        code, failure = EXIT_VERIFICATION, e
        for line in e.failures:
            print(line, file=sys.stderr)
    except (InputValidationError, ValidationError) as e:
        code, failure = EXIT_INPUT, e
        logger.warning(f"Rejected input for {args.command}: {e}")
    except InvariantViolation as e:
        code, failure = EXIT_INVARIANT, e
        logger.error(f"Invariant violation in {args.command}: {e}")
    else:
        print(report.to_json() if args.json else render_table(report))
        return EXIT_OK

    print(f"error: {failure}", file=sys.stderr)
    if args.json:
        print(error_report(args.command, problem, failure).to_json())
    return code


if __name__ == "__main__":
    sys.exit(main())
