from typing import Optional

from fastapi import APIRouter, Depends
from pydantic import ValidationError

from core.logic.errors import GradestabError
from models.problem import ProblemFile
from models.report import Report
from .helpers import http_error
from .services import ServiceWorker, get_service_worker

run_router = APIRouter(prefix="/run", tags=["run"])


@run_router.post(
    "/{command}",
    response_model=Report,
    summary="Run any command",
    description="Dispatch a command by name, exactly as the command-line front end does."
)
def run_command(
    command: str,
    problem: Optional[ProblemFile] = None,
    services: ServiceWorker = Depends(get_service_worker)
) -> Report:
    """
    Run ``command`` on the problem in the request body.

    verify-examples ignores the body and uses the default fixture.
    """
    try:
        return services.run(command, problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)
