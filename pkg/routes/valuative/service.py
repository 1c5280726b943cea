import logging
from typing import Any, Dict

from core.logic.algebra import format_rational, format_value
from core.logic.valuative import (
    DiagonalValuativeFunction,
    associated_graded,
    compare_optimal,
    graded_hn,
    hecke,
    is_optimal,
    log_discrepancy,
    optimal_tangent_cone,
    optimize,
    phi,
    vf_eval,
)
from models.problem import ProblemFile, selection_list
from models.report import Report
from routes.helpers import build_report, fmt_all, hn_outputs

logger = logging.getLogger(__name__)


def _function_outputs(vf: DiagonalValuativeFunction) -> Dict[str, Any]:
    return {
        "shifts": fmt_all(vf.shifts),
        "delta": format_rational(vf.delta),
        "phi": format_rational(phi(vf)),
        "optimal": is_optimal(vf),
    }


class ValuativeService:
    """Phi, Hecke transforms, descent and comparison of diagonal functions."""

    def phi(self, problem: ProblemFile) -> Report:
        vf = problem.to_function()
        outputs = _function_outputs(vf)
        outputs["log_discrepancy"] = format_rational(log_discrepancy(vf.valuation))
        outputs["graded"] = hn_outputs(graded_hn(vf))
        if problem.parameters.vector is not None:
            outputs["value"] = format_value(vf_eval(vf, list(problem.parameters.vector)))
        return build_report("phi", problem, outputs)

    def hecke(self, problem: ProblemFile) -> Report:
        vf = problem.to_function()
        selection = selection_list(problem)
        after = hecke(vf, selection)
        return build_report("hecke", problem, {
            "selection": sorted(selection),
            "before": _function_outputs(vf),
            "after": _function_outputs(after),
            "graded": [format_rational(-s.slope(after.valuation.algebra))
                       for s in associated_graded(after).summands],
        })

    def optimize(self, problem: ProblemFile) -> Report:
        vf = problem.to_function()
        result = optimize(vf)
        logger.info(f"optimize: {result.steps} Hecke step(s)")
        outputs = _function_outputs(result.function)
        outputs["steps"] = result.steps
        outputs["tangent_cone"] = hn_outputs(optimal_tangent_cone(vf))
        return build_report("optimize", problem, outputs, trace=result.trace)

    def compare(self, problem: ProblemFile) -> Report:
        first = problem.to_function('valuative_function')
        second = problem.to_function('other_function')
        relation = compare_optimal(first, second)
        return build_report("compare", problem, relation.model_dump(mode="json"))


def get_service() -> ValuativeService:
    return ValuativeService()
