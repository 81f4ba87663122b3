"""FastAPI application for multi-speed firing squad synchronization."""

from fastapi import FastAPI

from .. import __version__
from .routes import health, sync

app = FastAPI(
    title="MS-FSSP API",
    description="Firing squad synchronization on cellular automata whose cells update at different speeds",
    version=__version__
)

# Include routers
app.include_router(health.router)
app.include_router(sync.router)


@app.get("/")
async def root():
    """Root endpoint."""
    return {
        "message": "MS-FSSP API",
        "docs": "/docs",
        "health": "/health"
    }
