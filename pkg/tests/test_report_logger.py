"""Unit tests for the ReportLogger component.

Tests JSONL logging of verification reports:
- File and directory creation
- Record content and timing flag
- Graceful error handling
"""

import json

from avoid321.components.report_logger import ReportLogger
from avoid321.models.results import CheckReport


def _reports():
    return [
        CheckReport("dyck", (1, 4), "pass", elapsed_ms=3.0),
        CheckReport("hilbert", (1, 2), "fail", witness={"n": 2}, elapsed_ms=1.0),
    ]


class TestReportLogger:
    """Test writing reports."""

    def test_creates_directory(self, tmp_path):
        log_file = tmp_path / "logs" / "verify.jsonl"
        ReportLogger(log_file)
        assert log_file.parent.is_dir()

    def test_writes_one_line_per_report(self, tmp_path):
        log_file = tmp_path / "verify.jsonl"
        assert ReportLogger(log_file).log_reports(_reports()) == 2
        lines = [json.loads(line) for line in log_file.read_text().splitlines()]
        assert [entry["check"] for entry in lines] == ["dyck", "hilbert"]
        assert lines[1]["witness"] == {"n": 2}
        assert "logged_at" in lines[0]
        assert lines[0]["ms"] == 3.0

    def test_appends(self, tmp_path):
        log_file = tmp_path / "verify.jsonl"
        ReportLogger(log_file).log_reports(_reports())
        ReportLogger(log_file).log_reports(_reports()[:1])
        assert len(log_file.read_text().splitlines()) == 3

    def test_without_timing(self, tmp_path):
        log_file = tmp_path / "verify.jsonl"
        ReportLogger(log_file, include_timing=False).log_reports(_reports())
        entry = json.loads(log_file.read_text().splitlines()[0])
        assert "ms" not in entry
        assert "logged_at" not in entry


class TestDisabled:
    """Test disabled and failing loggers."""

    def test_none_path(self):
        logger = ReportLogger(None)
        assert logger.enabled is False
        assert logger.log_reports(_reports()) == 0

    def test_empty_batch(self, tmp_path):
        log_file = tmp_path / "verify.jsonl"
        assert ReportLogger(log_file).log_reports([]) == 0
        assert not log_file.exists()

    def test_write_error_disables(self, tmp_path, mocker):
        logger = ReportLogger(tmp_path / "verify.jsonl")
        mocker.patch("builtins.open", side_effect=OSError("disk full"))
        assert logger.log_reports(_reports()) == 0
        assert logger.enabled is False

    def test_mkdir_error_disables(self, tmp_path, mocker):
        mocker.patch("pathlib.Path.mkdir", side_effect=PermissionError("denied"))
        logger = ReportLogger(tmp_path / "sub" / "verify.jsonl")
        assert logger.enabled is False
