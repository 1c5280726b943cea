from fastapi import APIRouter, Depends
from pydantic import ValidationError

from core.logic.errors import GradestabError
from models.problem import ProblemFile
from models.report import Report
from routes.helpers import http_error
from .service import AlgebraService, get_service

algebra_router = APIRouter(prefix="/algebra", tags=["algebra"])


@algebra_router.post("/count", response_model=Report)
def count(problem: ProblemFile, service: AlgebraService = Depends(get_service)) -> Report:
    """
    Number of monomials of degree <= x.
    """
    try:
        return service.count(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)


@algebra_router.post("/coeffs", response_model=Report)
def coeffs(problem: ProblemFile, service: AlgebraService = Depends(get_service)) -> Report:
    """
    Leading and subleading Riemann-Roch coefficients.
    """
    try:
        return service.coeffs(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)


@algebra_router.post("/cesaro", response_model=Report)
def cesaro(problem: ProblemFile, service: AlgebraService = Depends(get_service)) -> Report:
    """
    Cesaro-averaged residual of the counting function at T.
    """
    try:
        return service.cesaro(problem)
    except (GradestabError, ValidationError) as e:
        raise http_error(e)
