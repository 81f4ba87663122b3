"""Runtime configuration read from the environment (and an optional .env file)."""

import os
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, Field

ROOT_DIR = Path(__file__).resolve().parent.parent

load_dotenv(ROOT_DIR / ".env")


class Settings(BaseModel):
    """Tunable limits and locations shared by the CLI, the API and the sweeps."""

    log_level: str = Field("INFO", description="Console log level")
    log_dir: Path = Field(ROOT_DIR / "logs", description="Directory for rotating log files")
    db_path: Path = Field(ROOT_DIR / "data" / "sync_runs.db", description="SQLite run history")
    budget: int = Field(100_000, ge=1, description="Maximum instances per verify sweep")
    n_jobs: int = Field(1, description="Worker processes for sweeps (-1 = all cores)")
    max_length: int = Field(512, ge=2, description="Initial line length of the optimal solver table; it grows on demand")
    trace_width: int = Field(120, ge=1, description="Trace columns before truncation")
    trace_height: int = Field(400, ge=1, description="Trace rows before truncation")


def _env(name: str):
    value = os.getenv(name)
    return value if value not in (None, "") else None


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Build settings once per process from MSFSSP_* variables."""
    overrides = {
        "log_level": _env("MSFSSP_LOG_LEVEL"),
        "log_dir": _env("MSFSSP_LOG_DIR"),
        "db_path": _env("MSFSSP_DB_PATH"),
        "budget": _env("MSFSSP_BUDGET"),
        "n_jobs": _env("MSFSSP_JOBS"),
        "max_length": _env("MSFSSP_MAX_LENGTH"),
        "trace_width": _env("MSFSSP_TRACE_WIDTH"),
        "trace_height": _env("MSFSSP_TRACE_HEIGHT"),
    }
    return Settings(**{key: value for key, value in overrides.items() if value is not None})
