"""API routes package."""

from . import health, sync
