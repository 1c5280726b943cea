from .router import run_router
