from fastapi import APIRouter, Depends
from pydantic import ValidationError

from core.logic.errors import GradestabError
from models.problem import ProblemFile
from models.report import Report
from routes.helpers import http_error
from .service import ValuativeService, get_service

valuative_router = APIRouter(prefix="/valuative", tags=["valuative"])


@valuative_router.post("/phi", response_model=Report)
def function_phi(problem: ProblemFile, service: ValuativeService = Depends(get_service)) -> Report:
    """
    Phi and the HN filtration of the associated graded module.
    """
    try:
        return service.phi(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)


@valuative_router.post("/hecke", response_model=Report)
def function_hecke(problem: ProblemFile, service: ValuativeService = Depends(get_service)) -> Report:
    """
    Hecke transform along the summands listed in parameters.selection.
    """
    try:
        return service.hecke(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)


@valuative_router.post("/optimize", response_model=Report)
def function_optimize(problem: ProblemFile, service: ValuativeService = Depends(get_service)) -> Report:
    """
    Descend to an optimal function; the report trace lists every Hecke step.
    """
    try:
        return service.optimize(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)


@valuative_router.post("/compare", response_model=Report)
def function_compare(problem: ProblemFile, service: ValuativeService = Depends(get_service)) -> Report:
    """
    Classify two optimal functions: parallel transport, Hecke related or unrelated.
    """
    try:
        return service.compare(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)
