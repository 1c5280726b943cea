"""
Shared plumbing for the command services: report assembly, canonical
formatting of library values, fixture loading and HTTP error mapping.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

from fastapi import HTTPException, status
from pydantic import ValidationError

from core.constants import FIXTURES_DIR, STATUS_ERROR, STATUS_FAILED, STATUS_OK
from core.logic.algebra import format_rational, format_value
from core.logic.errors import InputValidationError, InvariantViolation, VerificationFailure
from core.logic.modules import GradedModule, HNFiltration
from models.problem import ProblemFile
from models.report import Report

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent


def fmt_all(values: Iterable) -> list:
    return [format_value(v) for v in values]


def module_outputs(M: GradedModule) -> Dict[str, Any]:
    dumped = M.model_dump(mode="json")
    return {
        "free": [s["shift"] for s in dumped["free"]],
        "torsion": dumped["torsion"],
        "abstract": [{k: v for k, v in a.items() if k != "kind"} for a in dumped["abstract"]],
    }


def hn_outputs(hn: HNFiltration) -> Dict[str, Any]:
    stages = []
    for stage in hn.canonical():
        stages.append({
            "slope": format_rational(stage["slope"]),
            "summands": stage["summands"],
        })
    return {
        "stages": stages,
        "slopes": fmt_all(hn.quotient_slopes),
        "mu_max": format_rational(hn.mu_max),
        "mu_min": format_rational(hn.mu_min),
        "semistable": hn.length == 1,
    }


def build_report(
    command: str,
    problem: Optional[ProblemFile],
    outputs: Dict[str, Any],
    trace: Iterable = (),
    report_status: str = STATUS_OK,
    message: Optional[str] = None,
) -> Report:
    return Report(
        command=command,
        inputs={} if problem is None else problem.model_dump(mode="json", exclude_none=True),
        outputs=outputs,
        trace=[step.model_dump(mode="json") for step in trace],
        status=report_status,
        message=message,
    )


def error_report(command: str, problem: Optional[ProblemFile], exc: Exception) -> Report:
    """Report emitted in JSON mode when a command is rejected or breaks."""
    if isinstance(exc, VerificationFailure):
        report_status = STATUS_FAILED
        outputs = {"failures": exc.failures}
    else:
        report_status = STATUS_ERROR
        outputs = {}
    return build_report(command, problem, outputs, report_status=report_status, message=str(exc))


def resolve_path(path: str) -> Path:
    p = Path(path)
    return p if p.is_absolute() else PROJECT_ROOT / p


def resolve_fixture_name(name: str) -> Path:
    """
    Resolve a fixture name sent over HTTP; it must stay inside FIXTURES_DIR.

    Raises:
        InputValidationError: If the name points outside the fixtures directory
    """
    root = resolve_path(FIXTURES_DIR).resolve()
    candidate = (root / name).resolve()
    if not candidate.is_relative_to(root):
        logger.warning(f"Rejected fixture name {name!r}")
        raise InputValidationError(f"fixture must name a file under {FIXTURES_DIR}/, got {name!r}")
    return candidate


def load_fixture(path: str) -> Dict[str, Any]:
    """
    Read a JSON fixture; relative paths resolve against the project root.

    Raises:
        InputValidationError: If the file is missing or not a JSON object
    """
    resolved = resolve_path(path)
    try:
        data = json.loads(resolved.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise InputValidationError(f"fixture not found: {resolved}") from e
    except OSError as e:
        raise InputValidationError(f"cannot read fixture {resolved}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise InputValidationError(f"fixture {resolved} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise InputValidationError(f"fixture {resolved} must hold a JSON object")
    return data


def http_error(exc: Exception) -> HTTPException:
    """Map library errors onto HTTP status codes."""
    if isinstance(exc, (InputValidationError, ValidationError)):
        return HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(exc))
    if isinstance(exc, VerificationFailure):
        return HTTPException(
            status_code=status.HTTP_409_CONFLICT,
            detail={"message": str(exc), "failures": exc.failures},
        )
    if isinstance(exc, InvariantViolation):
        logger.error(f"Invariant violation: {exc}")
        return HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(exc))
    raise exc
