"""Monitoring: loguru setup and the sync-report audit log."""

from .logger import setup_logger, get_logger, log_sync_report

__all__ = ["setup_logger", "get_logger", "log_sync_report"]
