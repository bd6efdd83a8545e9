"""
Run Ledger

Records executed commands (their RunConfig document, outcome and artifacts)
in a local SQLite database through SQLAlchemy. Recording is opt-in: the CLI
only writes here when --ledger or SPANHYPER_LEDGER names a database.

Status values follow the CLI exit codes:
- succeeded: exit code 0
- domain_failure: exit code 1 (embedding failure, exhausted budget, oracle cap)
- usage_error: exit code 2 (parse, config or precondition errors)
"""

import json
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from sqlalchemy import Column, DateTime, Integer, String, Text, create_engine
from sqlalchemy import Enum as SAEnum
from sqlalchemy.orm import DeclarativeBase, Session, sessionmaker

DEFAULT_LEDGER = Path.home() / ".spanhyper" / "runs.db"


class Base(DeclarativeBase):
    pass


class RunStatus(str, Enum):
    SUCCEEDED = "succeeded"
    DOMAIN_FAILURE = "domain_failure"
    USAGE_ERROR = "usage_error"

    @classmethod
    def from_exit_code(cls, code: int) -> "RunStatus":
        return {0: cls.SUCCEEDED, 1: cls.DOMAIN_FAILURE}.get(code, cls.USAGE_ERROR)


def _now() -> datetime:
    return datetime.now(timezone.utc).replace(tzinfo=None)


class RunRecord(Base):
    """One executed command."""

    __tablename__ = "runs"

    id = Column(Integer, primary_key=True, autoincrement=True)
    command = Column(String(50), nullable=False)
    config_json = Column(Text, nullable=False)
    status = Column(SAEnum(RunStatus), nullable=False)
    exit_code = Column(Integer, nullable=False)
    summary = Column(Text, nullable=True)
    artifacts_json = Column(Text, nullable=True)  # JSON list of written paths
    seed = Column(String(30), nullable=True)  # 64-bit seeds overflow SQLite INTEGER

    started_at = Column(DateTime, nullable=False, default=_now)
    finished_at = Column(DateTime, nullable=True)


class RunTracker:
    """Store and query executed runs."""

    def __init__(self, db_path: Optional[Union[str, Path]] = None):
        if db_path is None:
            db_path = DEFAULT_LEDGER
        Path(db_path).expanduser().parent.mkdir(parents=True, exist_ok=True)
        self.db_path = Path(db_path).expanduser()
        self.engine = create_engine(f"sqlite:///{self.db_path}")
        Base.metadata.create_all(self.engine)
        self.SessionLocal = sessionmaker(bind=self.engine)

    def _get_session(self) -> Session:
        return self.SessionLocal()

    def record(
        self,
        command: str,
        config: dict,
        exit_code: int,
        summary: Optional[str] = None,
        artifacts: Optional[list[str]] = None,
        seed: Optional[int] = None,
        started_at: Optional[datetime] = None,
        finished_at: Optional[datetime] = None,
    ) -> int:
        """Add a finished run. Returns the record ID."""
        record = RunRecord(
            command=command,
            config_json=json.dumps(config, sort_keys=True),
            status=RunStatus.from_exit_code(exit_code),
            exit_code=exit_code,
            summary=summary,
            artifacts_json=json.dumps(artifacts or []),
            seed=None if seed is None else str(seed),
            started_at=started_at or _now(),
            finished_at=finished_at or _now(),
        )
        with self._get_session() as session:
            session.add(record)
            session.commit()
            return record.id

    def get_all(
        self, status: Optional[RunStatus] = None, command: Optional[str] = None
    ) -> list[dict]:
        """All runs, newest first, optionally filtered by status or command."""
        with self._get_session() as session:
            query = session.query(RunRecord)
            if status:
                query = query.filter(RunRecord.status == status)
            if command:
                query = query.filter(RunRecord.command == command)
            records = query.order_by(RunRecord.id.desc()).all()
            return [self._record_to_dict(r) for r in records]

    def get_by_id(self, record_id: int) -> Optional[dict]:
        with self._get_session() as session:
            record = session.get(RunRecord, record_id)
            if record:
                return self._record_to_dict(record)
            return None

    def get_stats(self) -> dict:
        """Counts by status and by command."""
        with self._get_session() as session:
            total = session.query(RunRecord).count()
            by_status = {}
            for status in RunStatus:
                count = session.query(RunRecord).filter(RunRecord.status == status).count()
                if count > 0:
                    by_status[status.value] = count
            by_command: dict[str, int] = {}
            for (command,) in session.query(RunRecord.command).all():
                by_command[command] = by_command.get(command, 0) + 1
            return {"total": total, "by_status": by_status, "by_command": by_command}

    def _record_to_dict(self, record: RunRecord) -> dict:
        return {
            "id": record.id,
            "command": record.command,
            "config": json.loads(record.config_json),
            "status": record.status.value if record.status else None,
            "exit_code": record.exit_code,
            "summary": record.summary,
            "artifacts": json.loads(record.artifacts_json or "[]"),
            "seed": int(record.seed) if record.seed is not None else None,
            "started_at": record.started_at.isoformat() if record.started_at else None,
            "finished_at": record.finished_at.isoformat() if record.finished_at else None,
        }

    def export_json(self, filepath: Optional[Union[str, Path]] = None) -> str:
        """Export all records as JSON."""
        data = json.dumps(self.get_all(), indent=2)
        if filepath:
            Path(filepath).write_text(data, encoding="utf-8")
        return data
