from contextlib import asynccontextmanager
import logging

from fastapi import FastAPI, status
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from decouple import config

from core.constants import LOG_LEVEL
from core.logic.algebra import dim_leq, make_algebra
from routes import run_router
from routes.algebra.router import algebra_router
from routes.examples.router import examples_router
from routes.modules.router import modules_router
from routes.valuative.router import valuative_router

# Configure logging
logging.basicConfig(
    level=LOG_LEVEL,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

# Environment configuration
ENVIRONMENT = config('ENVIRONMENT', default='development')
ALLOWED_ORIGINS = config('ALLOWED_ORIGINS', default='http://localhost:3000').split(',')
VERSION = "1.0.0"


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan manager for startup and shutdown events."""
    logger.info(f"Starting gradestab API in {ENVIRONMENT} mode")
    yield
    logger.info("Shutting down gradestab API")


app = FastAPI(
    title="gradestab API",
    description="Exact invariants of graded modules, HN filtrations and Hecke-transform descent",
    version=VERSION,
    lifespan=lifespan
)

# CORS Configuration
if ENVIRONMENT == 'production':
    logger.warning("Running in production mode with restricted CORS")
    allow_origins = ALLOWED_ORIGINS
else:
    logger.info("Running in development mode with permissive CORS")
    allow_origins = ["*"]

app.add_middleware(
    CORSMiddleware,
    allow_origins=allow_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routers
app.include_router(algebra_router)
app.include_router(modules_router)
app.include_router(valuative_router)
app.include_router(examples_router)
app.include_router(run_router)


@app.get(
    '/',
    tags=["health"],
    summary="Root endpoint",
    description="Simple endpoint to verify the API is running"
)
async def root():
    """Root endpoint."""
    return {
        "message": "gradestab API is running",
        "version": VERSION,
        "environment": ENVIRONMENT
    }


@app.get(
    "/health",
    tags=["health"],
    summary="Health check",
    description="Runs a small counting self-test"
)
async def health():
    """k[x^(1), y^(2)] has 9 monomials of degree <= 4."""
    try:
        count = dim_leq(make_algebra(["1", "2"]), 4)
    except Exception as e:
        logger.error(f"Health check failed: {e}")
        return JSONResponse(
            status_code=status.HTTP_503_SERVICE_UNAVAILABLE,
            content={"status": "unhealthy", "self_test": "error", "error": str(e)}
        )

    if count != 9:
        logger.error(f"Health check self-test returned {count}, expected 9")
        return JSONResponse(
            status_code=status.HTTP_503_SERVICE_UNAVAILABLE,
            content={"status": "unhealthy", "self_test": "mismatch"}
        )

    return {
        "status": "healthy",
        "self_test": "passed",
        "environment": ENVIRONMENT
    }
