import logging

from core.logic.algebra import format_rational
from core.logic.modules import (
    degree,
    degree_of_dual,
    dual,
    hn_filtration,
    module_dim_leq,
    slope,
    twist,
)
from models.problem import ProblemFile
from models.report import Report
from routes.helpers import build_report, hn_outputs, module_outputs

logger = logging.getLogger(__name__)


class ModuleService:
    """Invariants and HN filtrations of split graded modules."""

    def info(self, problem: ProblemFile) -> Report:
        """
        Rank, a_n, degree, slope and the duality check; the dual, the twist
        and the count are added when they apply to the module and parameters.
        """
        M = problem.to_module()
        outputs = {
            "module": module_outputs(M),
            "rank": M.rank,
            "a_top": format_rational(M.a_top),
            "degree": format_rational(degree(M)),
            "degree_of_dual": format_rational(degree_of_dual(M)),
        }
        if M.rank > 0:
            outputs["slope"] = format_rational(slope(M))
        if M.rank > 0 and M.is_torsion_free:
            outputs["semistable"] = hn_filtration(M).length == 1
        if not M.torsion and not M.abstract:
            outputs["dual"] = module_outputs(dual(M))
        if problem.parameters.twist is not None:
            twisted = twist(M, problem.parameters.twist)
            outputs["twist"] = format_rational(problem.parameters.twist)
            outputs["twisted_degree"] = format_rational(degree(twisted))
            if twisted.rank > 0:
                outputs["twisted_slope"] = format_rational(slope(twisted))
        if problem.parameters.x is not None and not M.abstract:
            outputs["count"] = module_dim_leq(M, problem.parameters.x)
        return build_report("module", problem, outputs)

    def hn(self, problem: ProblemFile) -> Report:
        M = problem.to_module()
        hn = hn_filtration(M)
        logger.info(f"HN of rank {M.rank} module has {hn.length} stage(s)")
        return build_report("hn", problem, hn_outputs(hn))


def get_service() -> ModuleService:
    return ModuleService()
