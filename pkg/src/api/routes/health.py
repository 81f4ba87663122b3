"""Health check and monitoring endpoints."""

from fastapi import APIRouter

from ...automata.solvers import SOLVERS, get_solver
from ...monitoring import get_logger
from ..database import get_run_stats
from ..schemas import HealthResponse

logger = get_logger()

router = APIRouter(tags=["health"])


def solvers_ready() -> bool:
    """Build (or fetch cached) every registered solver."""
    try:
        for name in SOLVERS:
            get_solver(name)
    except Exception as e:
        logger.error(f"Error building solvers: {e}")
        return False
    return True


@router.get("/health", response_model=HealthResponse)
async def health_check():
    """Check API health and solver registry status."""
    ready = solvers_ready()
    return HealthResponse(
        status="healthy" if ready else "degraded",
        solvers_loaded=ready,
        solvers=list(SOLVERS),
    )


@router.get("/stats")
async def get_stats():
    """Get run-history statistics for monitoring."""
    stats = get_run_stats()
    stats["solvers_loaded"] = solvers_ready()
    return stats
