"""
Report Store - Persistent storage for CLI run reports.
"""

import hashlib
import json
import logging
import os
import sqlite3
import uuid
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from config.settings import get_settings

logger = logging.getLogger(__name__)


def input_digest(data: str) -> str:
    """sha256 of the raw input text (or of the generator parameters)."""
    return hashlib.sha256(data.encode("utf-8")).hexdigest()


@dataclass
class RunReport:
    """Record of one CLI invocation."""
    command: str
    input_digest: str
    summary: Dict[str, Any]
    seed: Optional[int] = None
    wall_time: float = 0.0
    validation: Optional[bool] = None
    id: str = field(default_factory=lambda: uuid.uuid4().hex)
    timestamp: datetime = field(default_factory=datetime.now)

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        out = {
            "command": self.command,
            "input_digest": self.input_digest,
            "seed": self.seed,
            "summary": self.summary,
            "validation": self.validation,
        }
        if include_timing:
            out["id"] = self.id
            out["timestamp"] = self.timestamp.isoformat()
            out["wall_time"] = self.wall_time
        return out


class ReportStore:
    """SQLite-based store for run reports."""

    def __init__(self, db_path: str = None):
        """Initialize the report store.

        Args:
            db_path: Path to SQLite database.
        """
        settings = get_settings()
        self.db_path = db_path or settings.report_db_path
        parent = os.path.dirname(self.db_path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        self._ensure_tables()

    def _get_connection(self) -> sqlite3.Connection:
        """Get a database connection."""
        conn = sqlite3.connect(self.db_path)
        conn.row_factory = sqlite3.Row
        return conn

    def _ensure_tables(self) -> None:
        """Create tables if they don't exist."""
        conn = self._get_connection()
        cursor = conn.cursor()

        cursor.execute("""
            CREATE TABLE IF NOT EXISTS run_reports (
                id TEXT PRIMARY KEY,
                timestamp TEXT NOT NULL,
                command TEXT NOT NULL,
                input_digest TEXT,
                seed INTEGER,
                summary TEXT,
                wall_time REAL,
                validation INTEGER
            )
        """)

        cursor.execute("""
            CREATE INDEX IF NOT EXISTS idx_command
            ON run_reports(command)
        """)

        conn.commit()
        conn.close()

    def save_report(self, report: RunReport) -> str:
        """Save a report.

        Args:
            report: RunReport to save.

        Returns:
            The report id.
        """
        conn = self._get_connection()
        cursor = conn.cursor()

        validation = None if report.validation is None else int(report.validation)
        cursor.execute("""
            INSERT OR REPLACE INTO run_reports
            (id, timestamp, command, input_digest, seed, summary, wall_time, validation)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
        """, (
            report.id,
            report.timestamp.isoformat(),
            report.command,
            report.input_digest,
            report.seed,
            json.dumps(report.summary, sort_keys=True),
            report.wall_time,
            validation,
        ))

        conn.commit()
        conn.close()
        logger.debug("stored report %s (%s)", report.id, report.command)
        return report.id

    def get_report(self, report_id: str) -> Optional[RunReport]:
        conn = self._get_connection()
        cursor = conn.cursor()

        cursor.execute("SELECT * FROM run_reports WHERE id = ?", (report_id,))
        row = cursor.fetchone()
        conn.close()

        if row:
            return self._row_to_report(row)
        return None

    def get_recent(self, command: str = None, limit: int = 10) -> List[RunReport]:
        """Most recent reports, optionally for one command.

        Args:
            command: Optional command filter.
            limit: Maximum results.

        Returns:
            List of RunReport, newest first.
        """
        conn = self._get_connection()
        cursor = conn.cursor()

        if command:
            cursor.execute("""
                SELECT * FROM run_reports
                WHERE command = ?
                ORDER BY timestamp DESC
                LIMIT ?
            """, (command, limit))
        else:
            cursor.execute("""
                SELECT * FROM run_reports
                ORDER BY timestamp DESC
                LIMIT ?
            """, (limit,))

        rows = cursor.fetchall()
        conn.close()

        return [self._row_to_report(row) for row in rows]

    def get_stats(self) -> Dict[str, Any]:
        """Get report store statistics.

        Returns:
            Dict with statistics.
        """
        conn = self._get_connection()
        cursor = conn.cursor()

        cursor.execute("SELECT COUNT(*) as count FROM run_reports")
        total = cursor.fetchone()["count"]

        cursor.execute("""
            SELECT command, COUNT(*) as count
            FROM run_reports
            GROUP BY command
        """)
        command_counts = {row["command"]: row["count"] for row in cursor.fetchall()}

        cursor.execute("""
            SELECT validation, COUNT(*) as count
            FROM run_reports
            WHERE validation IS NOT NULL
            GROUP BY validation
        """)
        by_validation = {("passed" if row["validation"] else "failed"): row["count"]
                         for row in cursor.fetchall()}

        conn.close()

        return {
            "total_reports": total,
            "by_command": command_counts,
            "validation_passed": by_validation.get("passed", 0),
            "validation_failed": by_validation.get("failed", 0),
        }

    def _row_to_report(self, row: sqlite3.Row) -> RunReport:
        """Convert database row to RunReport."""
        validation = row["validation"]
        return RunReport(
            id=row["id"],
            timestamp=datetime.fromisoformat(row["timestamp"]),
            command=row["command"],
            input_digest=row["input_digest"],
            seed=row["seed"],
            summary=json.loads(row["summary"]) if row["summary"] else {},
            wall_time=row["wall_time"] or 0.0,
            validation=None if validation is None else bool(validation),
        )
