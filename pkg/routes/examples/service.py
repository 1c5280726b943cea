import logging
from typing import Optional

from core.constants import EXAMPLES_FIXTURE
from core.logic.algebra import format_rational
from core.logic.errors import VerificationFailure
from core.logic.modules import hn_filtration
from core.logic.valuative import cone_example, verify_examples
from models.problem import ProblemFile, require_parameter
from models.report import Report
from routes.helpers import build_report, hn_outputs, load_fixture

logger = logging.getLogger(__name__)


class ExamplesService:
    """The worked examples: cones over curves and the fixture verification."""

    def cone(self, problem: ProblemFile) -> Report:
        g = require_parameter(problem, "genus")
        degL = require_parameter(problem, "degL")
        result = cone_example(g, degL)
        return build_report("cone", problem, {
            "genus": result.genus,
            "degL": result.degL,
            "optimal_shift": result.optimal_shift,
            "phi": format_rational(result.phi),
            "gr": hn_outputs(hn_filtration(result.gr)),
        }, trace=result.trace)

    def verify(self, fixture: Optional[str] = None) -> Report:
        """
        Run every example check against the fixture.

        Raises:
            VerificationFailure: If any check fails
        """
        path = fixture or EXAMPLES_FIXTURE
        checks = verify_examples(load_fixture(path))
        failed = [c for c in checks if not c.passed]
        outputs = {
            "fixture": path,
            "passed": len(checks) - len(failed),
            "failed": len(failed),
            "checks": [c.model_dump(mode="json") for c in checks],
        }
        if failed:
            raise VerificationFailure(
                [f"{c.name}: expected {c.expected!r}, got {c.actual!r}" for c in failed]
            )
        return build_report("verify-examples", None, outputs)


def get_service() -> ExamplesService:
    return ExamplesService()
