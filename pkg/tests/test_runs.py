"""
Tests for the run ledger.
"""

import json
import os
import tempfile
from datetime import datetime

from spanhyper.runs import RunStatus, RunTracker


class TestRunStatus:
    def test_from_exit_code(self):
        assert RunStatus.from_exit_code(0) == RunStatus.SUCCEEDED
        assert RunStatus.from_exit_code(1) == RunStatus.DOMAIN_FAILURE
        assert RunStatus.from_exit_code(2) == RunStatus.USAGE_ERROR


class TestRunTracker:
    """Test the SQLite run ledger."""

    def setup_method(self):
        # Use temporary database for tests
        self.tmp_dir = tempfile.mkdtemp()
        self.db_path = os.path.join(self.tmp_dir, "runs.db")
        self.tracker = RunTracker(db_path=self.db_path)

    def _record(self, command="gamma", exit_code=0, **kwargs):
        config = {"command": command, "params": {"file": "q.hg"}, "seed": None}
        return self.tracker.record(command, config, exit_code, **kwargs)

    def test_record(self):
        record_id = self._record(summary="gamma = 6/7")
        assert record_id is not None
        assert record_id > 0

    def test_get_by_id(self):
        record_id = self._record(summary="gamma = 6/7", artifacts=["out.json"])
        record = self.tracker.get_by_id(record_id)
        assert record is not None
        assert record["command"] == "gamma"
        assert record["status"] == "succeeded"
        assert record["config"]["params"] == {"file": "q.hg"}
        assert record["artifacts"] == ["out.json"]
        assert record["summary"] == "gamma = 6/7"

    def test_get_by_id_not_found(self):
        record = self.tracker.get_by_id(9999)
        assert record is None

    def test_large_seed_round_trip(self):
        seed = 2**64 - 1
        record_id = self._record("threshold", seed=seed)
        assert self.tracker.get_by_id(record_id)["seed"] == seed

    def test_timestamps(self):
        started = datetime(2026, 1, 1, 12, 0, 0)
        finished = datetime(2026, 1, 1, 12, 0, 5)
        record_id = self._record(started_at=started, finished_at=finished)
        record = self.tracker.get_by_id(record_id)
        assert record["started_at"] == "2026-01-01T12:00:00"
        assert record["finished_at"] == "2026-01-01T12:00:05"

    def test_get_all_newest_first(self):
        first = self._record()
        second = self._record("contain")
        ids = [r["id"] for r in self.tracker.get_all()]
        assert ids == [second, first]

    def test_filter_by_status(self):
        self._record(exit_code=0)
        self._record("embed", exit_code=1)
        self._record("gen", exit_code=2)
        failures = self.tracker.get_all(status=RunStatus.DOMAIN_FAILURE)
        assert [r["command"] for r in failures] == ["embed"]
        assert failures[0]["exit_code"] == 1

    def test_filter_by_command(self):
        self._record("gamma")
        self._record("embed", exit_code=1)
        assert len(self.tracker.get_all(command="gamma")) == 1

    def test_stats(self):
        self._record("gamma")
        self._record("gamma")
        self._record("embed", exit_code=1)
        stats = self.tracker.get_stats()
        assert stats["total"] == 3
        assert stats["by_status"] == {"succeeded": 2, "domain_failure": 1}
        assert stats["by_command"] == {"gamma": 2, "embed": 1}

    def test_export_json(self):
        self._record()
        self._record("embed", exit_code=1)
        export_path = os.path.join(self.tmp_dir, "export.json")
        data = self.tracker.export_json(export_path)
        parsed = json.loads(data)
        assert len(parsed) == 2
        assert os.path.exists(export_path)
