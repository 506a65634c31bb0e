"""Append verification reports to a JSONL file."""

import json
import logging
from datetime import datetime
from pathlib import Path

from avoid321.models.results import CheckReport

logger = logging.getLogger(__name__)


class ReportLogger:
    """Writes one JSON line per check report.

    - Creates the parent directory when missing
    - Appends to an existing file
    - Logs I/O failures and disables itself instead of raising
    """

    def __init__(self, path: str | Path | None, include_timing: bool = True):
        """Initialize the logger.

        Args:
            path: Target JSONL file; ``None`` disables logging
            include_timing: Keep the ``ms`` field in each record
        """
        self.log_path = Path(path) if path else None
        self.include_timing = include_timing
        self.enabled = self.log_path is not None

        if self.enabled:
            try:
                self.log_path.parent.mkdir(parents=True, exist_ok=True)
                logger.info(f"ReportLogger initialized: {self.log_path}")
            except Exception as e:
                logger.error(f"Failed to create report directory: {e}")
                self.enabled = False

    def log_reports(self, reports: list[CheckReport]) -> int:
        """Append reports; returns how many lines were written."""
        if not self.enabled or not reports:
            return 0

        logged_at = datetime.now().isoformat()
        try:
            with open(self.log_path, "a", encoding="utf-8") as f:
                for report in reports:
                    entry = report.to_json(self.include_timing)
                    if self.include_timing:
                        entry["logged_at"] = logged_at
                    f.write(json.dumps(entry, sort_keys=True) + "\n")
            logger.debug(f"Logged {len(reports)} reports to {self.log_path}")
            return len(reports)
        except Exception as e:
            logger.error(f"Failed to write report log: {e}")
            self.enabled = False
            return 0
