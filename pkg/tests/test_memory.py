"""Tests for the run report store."""

import os
from datetime import datetime, timedelta

from memory import ReportStore, RunReport, input_digest


def _report(command="greedy", validation=None, minutes=0, **summary):
    return RunReport(command, input_digest(command), summary or {"length": 5},
                     seed=7, wall_time=0.25, validation=validation,
                     timestamp=datetime(2024, 1, 1) + timedelta(minutes=minutes))


class TestRunReport:
    def test_digest_is_stable(self):
        assert input_digest("1 2 3") == input_digest("1 2 3")
        assert len(input_digest("")) == 64

    def test_to_dict_without_timing(self):
        data = _report().to_dict(include_timing=False)
        assert "wall_time" not in data and "id" not in data
        assert data["seed"] == 7

    def test_to_dict_with_timing(self):
        data = _report().to_dict()
        assert data["wall_time"] == 0.25
        assert data["timestamp"].startswith("2024-01-01")


class TestReportStore:
    def test_default_path_from_settings(self, tmp_path):
        store = ReportStore()
        assert store.db_path == os.path.join(str(tmp_path), "reports.db")
        assert os.path.exists(store.db_path)

    def test_save_and_get(self, tmp_path):
        store = ReportStore(str(tmp_path / "nested" / "r.db"))
        report = _report(validation=True)
        assert store.save_report(report) == report.id
        loaded = store.get_report(report.id)
        assert loaded.command == "greedy"
        assert loaded.summary == {"length": 5}
        assert loaded.validation is True
        assert loaded.seed == 7
        assert store.get_report("missing") is None

    def test_recent_and_stats(self, tmp_path):
        store = ReportStore(str(tmp_path / "r.db"))
        store.save_report(_report("greedy", True, minutes=1))
        store.save_report(_report("count", False, minutes=2))
        store.save_report(_report("count", None, minutes=3))
        recent = store.get_recent()
        assert [r.command for r in recent] == ["count", "count", "greedy"]
        assert len(store.get_recent("greedy")) == 1
        assert len(store.get_recent(limit=2)) == 2
        stats = store.get_stats()
        assert stats["total_reports"] == 3
        assert stats["by_command"] == {"greedy": 1, "count": 2}
        assert stats["validation_passed"] == 1
        assert stats["validation_failed"] == 1
