from typing import Optional

from fastapi import APIRouter, Depends
from pydantic import ValidationError

from core.logic.errors import GradestabError
from models.problem import ProblemFile
from models.report import Report
from routes.helpers import http_error, resolve_fixture_name
from .service import ExamplesService, get_service

examples_router = APIRouter(prefix="/examples", tags=["examples"])


@examples_router.post("/cone", response_model=Report)
def cone(problem: ProblemFile, service: ExamplesService = Depends(get_service)) -> Report:
    """
    Optimal function on the tangent module of a cone over a curve.
    """
    try:
        return service.cone(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)


@examples_router.get("/verify", response_model=Report)
def verify(fixture: Optional[str] = None, service: ExamplesService = Depends(get_service)) -> Report:
    """
    Check the built-in examples against the expected-value fixture; 409 on mismatch.

    ``fixture`` names a file under the fixtures directory; other paths are
    rejected with 422.
    """
    try:
        if fixture is not None:
            fixture = str(resolve_fixture_name(fixture))
        return service.verify(fixture)
    except GradestabError as e:
        raise http_error(e)
