import logging
from typing import Callable, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from core.logic.errors import InputValidationError
from models.problem import ProblemFile
from models.report import Report
from .algebra.service import AlgebraService, get_service as get_algebra_service
from .examples.service import ExamplesService, get_service as get_examples_service
from .modules.service import ModuleService, get_service as get_module_service
from .valuative.service import ValuativeService, get_service as get_valuative_service

logger = logging.getLogger(__name__)

VERIFY_COMMAND = "verify-examples"


class ServiceWorker(BaseModel):
    """
    Dispatches a command name to the service that implements it. The CLI and
    the /run endpoint both go through here, so they produce identical reports.
    """
    algebra_service: AlgebraService = Field(..., description="Counting and coefficients")
    module_service: ModuleService = Field(..., description="Split module invariants")
    valuative_service: ValuativeService = Field(..., description="Valuative functions and descent")
    examples_service: ExamplesService = Field(..., description="Worked examples")

    model_config = ConfigDict(
        arbitrary_types_allowed=True
    )

    @property
    def commands(self) -> Dict[str, Callable[[ProblemFile], Report]]:
        return {
            "count": self.algebra_service.count,
            "coeffs": self.algebra_service.coeffs,
            "cesaro": self.algebra_service.cesaro,
            "module": self.module_service.info,
            "hn": self.module_service.hn,
            "phi": self.valuative_service.phi,
            "hecke": self.valuative_service.hecke,
            "optimize": self.valuative_service.optimize,
            "compare": self.valuative_service.compare,
            "cone": self.examples_service.cone,
        }

    def run(self, command: str, problem: Optional[ProblemFile] = None, fixture: Optional[str] = None) -> Report:
        """
        Run one command.

        Args:
            command: a command name, or "verify-examples"
            problem: the parsed problem file; not used by verify-examples
            fixture: expected-value fixture for verify-examples

        Raises:
            InputValidationError: On an unknown command or a missing problem
        """
        logger.info(f"Running command {command!r}")
        if command == VERIFY_COMMAND:
            return self.examples_service.verify(fixture)
        handler = self.commands.get(command)
        if handler is None:
            raise InputValidationError(f"unknown command {command!r}")
        if problem is None:
            raise InputValidationError(f"command {command!r} needs a problem file")
        return handler(problem)


def command_names() -> list:
    return list(get_service_worker().commands) + [VERIFY_COMMAND]


def get_service_worker() -> ServiceWorker:
    """Dependency injection for ServiceWorker."""
    return ServiceWorker(
        algebra_service=get_algebra_service(),
        module_service=get_module_service(),
        valuative_service=get_valuative_service(),
        examples_service=get_examples_service(),
    )
