"""Local ledger of executed runs."""

from spanhyper.runs.tracker import DEFAULT_LEDGER, RunRecord, RunStatus, RunTracker

__all__ = ["DEFAULT_LEDGER", "RunRecord", "RunStatus", "RunTracker"]
