"""Pydantic schemas for API request/response validation."""

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field


class SimulateRequest(BaseModel):
    """Request schema for the wrapper simulation endpoint."""

    periods: list[int] = Field(..., min_length=1, description="Per-cell periods p_1..p_n")
    period_set: Optional[list[int]] = Field(None, description="Full period set P; defaults to the distinct periods")
    solver: str = Field("optimal", description="Baseline solver name")
    horizon: Optional[int] = Field(None, ge=1, description="Step horizon; defaults to 4k + 4t_c")
    name: Optional[str] = Field(None, description="Label recorded with the run")

    class Config:
        json_schema_extra = {
            "example": {
                "periods": [1, 2, 1],
                "solver": "optimal",
                "name": "small_mixed",
            }
        }


class SimulateResponse(BaseModel):
    """Response schema for the wrapper simulation endpoint."""

    summary: dict[str, Any]
    timing_exact: bool
    within_bound: bool
    warnings: list[str] = Field(default_factory=list)
    response_time_ms: float


class OracleRequest(BaseModel):
    """Request schema for the signal oracle endpoint."""

    periods: list[int] = Field(..., min_length=2)
    period_set: Optional[list[int]] = None

    class Config:
        json_schema_extra = {"example": {"periods": [1, 1, 3, 3, 2, 2, 2]}}


class OracleResponse(BaseModel):
    """Earliest-arrival and return times per cell plus reference totals."""

    periods: list[int]
    arrivals: list[int]
    returns: list[int]
    round_trip_time: int
    mu_reference: int
    uniform_transfer_time: int
    instance_count: int


class FamilyRequest(BaseModel):
    """Request schema for block-family generation."""

    period_set: list[int] = Field(..., min_length=2)
    m: int = Field(..., ge=1, description="Blocks of each type")
    select: Literal["index", "all", "random"] = "index"
    index: int = Field(0, ge=0)
    count: int = Field(1, ge=1, description="Arrangements drawn when select is 'random'")
    seed: Optional[int] = None
    head: Optional[int] = Field(None, description="Period of the two head cells")

    class Config:
        json_schema_extra = {"example": {"period_set": [2, 3], "m": 1, "select": "all"}}


class FamilyInstance(BaseModel):
    index: int
    arrangement: list[int]
    periods: list[int]
    closed_form_roundtrip: int
    round_trip_time: int


class FamilyResponse(BaseModel):
    params: dict[str, Any]
    arrangement_count: int
    instances: list[FamilyInstance]


class HealthResponse(BaseModel):
    """Response schema for health check endpoint."""

    status: str
    solvers_loaded: bool
    solvers: list[str]
