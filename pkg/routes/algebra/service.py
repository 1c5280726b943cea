import logging

from core.logic.algebra import (
    cesaro_residual,
    coefficients,
    dim_leq,
    format_rational,
    log_discrepancy,
    step_integral,
)
from models.problem import ProblemFile, require_parameter
from models.report import Report
from routes.helpers import build_report

logger = logging.getLogger(__name__)


class AlgebraService:
    """
    Counting and Riemann-Roch commands on the ambient weighted algebra.
    """

    def count(self, problem: ProblemFile) -> Report:
        """dim_k(S_{<=x}) for the parameter x."""
        S = problem.to_algebra()
        x = require_parameter(problem, "x")
        value = dim_leq(S, x)
        logger.info(f"count on {S} at x={x}: {value}")
        return build_report("count", problem, {
            "algebra": str(S),
            "x": format_rational(x),
            "count": value,
        })

    def coeffs(self, problem: ProblemFile) -> Report:
        S = problem.to_algebra()
        rr = coefficients(S)
        return build_report("coeffs", problem, {
            "algebra": str(S),
            "a_top": format_rational(rr.a_top),
            "a_subtop": format_rational(rr.a_subtop),
            "log_discrepancy": format_rational(log_discrepancy(S)),
        })

    def cesaro(self, problem: ProblemFile) -> Report:
        S = problem.to_algebra()
        T = require_parameter(problem, "T")
        residual = cesaro_residual(S, T)
        return build_report("cesaro", problem, {
            "algebra": str(S),
            "T": format_rational(T),
            "integral": format_rational(step_integral(S, T)),
            "residual": format_rational(residual),
        })


def get_service() -> AlgebraService:
    return AlgebraService()
