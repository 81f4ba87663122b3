"""SQLite run history for synchronization requests."""

import json
import sqlite3
from contextlib import contextmanager
from typing import Optional

from ..settings import get_settings

DB_PATH = get_settings().db_path


def init_db():
    """Initialize the database with required tables."""
    DB_PATH.parent.mkdir(parents=True, exist_ok=True)

    with get_connection() as conn:
        conn.execute("""
            CREATE TABLE IF NOT EXISTS sync_runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                name TEXT,
                periods TEXT NOT NULL,
                solver TEXT NOT NULL,

                -- Instance shape
                n INTEGER NOT NULL,
                k INTEGER NOT NULL,
                t_c INTEGER NOT NULL,

                -- Outcome
                fire_time INTEGER,
                predicted INTEGER NOT NULL,
                passed INTEGER NOT NULL,

                -- Metadata
                created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                request_ip TEXT,
                response_time_ms REAL
            )
        """)

        conn.execute("""
            CREATE INDEX IF NOT EXISTS idx_sync_runs_created_at ON sync_runs(created_at)
        """)

        conn.commit()


@contextmanager
def get_connection():
    """Get database connection context manager."""
    conn = sqlite3.connect(DB_PATH)
    conn.row_factory = sqlite3.Row
    try:
        yield conn
    finally:
        conn.close()


def save_run(
    summary: dict,
    passed: bool,
    request_ip: Optional[str] = None,
    response_time_ms: Optional[float] = None,
):
    """Store one wrapper run from its report summary."""
    with get_connection() as conn:
        conn.execute("""
            INSERT INTO sync_runs (
                name, periods, solver, n, k, t_c, fire_time, predicted, passed,
                request_ip, response_time_ms
            ) VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
        """, (
            summary.get("name"),
            json.dumps(summary["periods"]),
            summary["solver"],
            summary["n"],
            summary["k"],
            summary["t_c"],
            summary.get("fire_time"),
            summary["predicted"],
            int(passed),
            request_ip,
            response_time_ms,
        ))
        conn.commit()


def get_run_stats():
    """Get statistics about stored runs for monitoring."""
    with get_connection() as conn:
        stats = {}

        result = conn.execute("SELECT COUNT(*) as count FROM sync_runs").fetchone()
        stats["total_runs"] = result["count"]

        result = conn.execute("SELECT COUNT(*) as count FROM sync_runs WHERE passed = 0").fetchone()
        stats["failed_runs"] = result["count"]

        result = conn.execute("""
            SELECT solver, COUNT(*) as count
            FROM sync_runs
            GROUP BY solver
        """).fetchall()
        stats["by_solver"] = {row["solver"]: row["count"] for row in result}

        result = conn.execute("SELECT AVG(k) as avg_k FROM sync_runs").fetchone()
        stats["avg_k"] = round(result["avg_k"], 2) if result["avg_k"] else 0

        result = conn.execute("""
            SELECT COUNT(*) as count
            FROM sync_runs
            WHERE created_at > datetime('now', '-1 day')
        """).fetchone()
        stats["last_24h"] = result["count"]

        return stats


# Initialize database on module import
init_db()
