"""Logging configuration for the synchronization toolkit."""

import json
import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from ..settings import get_settings

CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"
SYNC_TAG = "SYNC:"


def setup_logger(level: Optional[str] = None, log_dir: Optional[Path] = None):
    """Install the console, file and sync-audit sinks.

    Called on import with the configured level; the CLI calls it again to
    switch the console to DEBUG for --verbose.
    """
    settings = get_settings()
    log_dir = Path(log_dir or settings.log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)

    logger.remove()

    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level or settings.log_level, colorize=True)

    # Everything, DEBUG and up
    logger.add(
        log_dir / "app.log",
        format=FILE_FORMAT,
        level="DEBUG",
        rotation="10 MB",
        retention="30 days",
        compression="gz",
    )

    logger.add(
        log_dir / "error.log",
        format=FILE_FORMAT,
        level="ERROR",
        rotation="10 MB",
        retention="30 days",
        compression="gz",
    )

    # One JSON summary per wrapper run
    logger.add(
        log_dir / "sync_reports.log",
        format="{message}",
        level="INFO",
        filter=lambda record: record["message"].startswith(SYNC_TAG),
        rotation="50 MB",
        retention="90 days",
    )

    logger.debug(f"Logger initialized in {log_dir}")
    return logger


def get_logger():
    """Get the configured logger instance."""
    return logger


def log_sync_report(summary: dict):
    """Write one line to the sync audit log."""
    logger.info(f"{SYNC_TAG} {json.dumps(summary, sort_keys=True, default=str)}")


setup_logger()
