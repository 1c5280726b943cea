from fastapi import APIRouter, Depends
from pydantic import ValidationError

from core.logic.errors import GradestabError
from models.problem import ProblemFile
from models.report import Report
from routes.helpers import http_error
from .service import ModuleService, get_service

modules_router = APIRouter(prefix="/modules", tags=["modules"])


@modules_router.post("/info", response_model=Report)
def module_info(problem: ProblemFile, service: ModuleService = Depends(get_service)) -> Report:
    """
    Rank, degree, slope and duality check of a split module.
    """
    try:
        return service.info(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)


@modules_router.post("/hn", response_model=Report)
def module_hn(problem: ProblemFile, service: ModuleService = Depends(get_service)) -> Report:
    """
    Harder-Narasimhan filtration of a torsion-free split module.
    """
    try:
        return service.hn(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)
