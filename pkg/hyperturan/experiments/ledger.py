"""Append-only JSONL ledger of verify runs, rotated into archives by size."""

from __future__ import annotations

import json
from collections.abc import Iterator
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from loguru import logger

from hyperturan.experiments.report import RunReport

UTC = timezone.utc

LEDGER_NAME = "ledger.jsonl"


@dataclass(frozen=True, slots=True)
class LedgerEntry:
    """One experiment run as recorded by `hyperturan verify`."""

    ts: str
    experiment: str
    passed: bool
    checks: int
    failures: int
    wall_time: float
    version: str
    error: str | None = None

    @classmethod
    def from_report(cls, report: RunReport) -> LedgerEntry:
        return cls(
            ts=datetime.now(UTC).isoformat(),
            experiment=report.experiment,
            passed=report.passed,
            checks=len(report.records),
            failures=report.failures,
            wall_time=round(report.wall_time, 3),
            version=report.version,
            error=report.error,
        )

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> LedgerEntry | None:
        """None for lines that are not run entries."""
        try:
            return cls(
                ts=str(payload["ts"]),
                experiment=str(payload["experiment"]),
                passed=bool(payload["passed"]),
                checks=int(payload.get("checks", 0)),
                failures=int(payload.get("failures", 0)),
                wall_time=float(payload.get("wall_time", 0.0)),
                version=str(payload.get("version", "")),
                error=payload.get("error"),
            )
        except (KeyError, TypeError, ValueError):
            return None


class RunLedger:
    """`<output_dir>/ledger.jsonl` plus timestamped archives under `<output_dir>/archive`."""

    def __init__(self, output_dir: Path, *, max_bytes: int = 256 * 1024, max_archives: int = 5):
        self.path = output_dir / LEDGER_NAME
        self.archive_dir = output_dir / "archive"
        self.max_bytes = max_bytes
        self.max_archives = max_archives

    def append(self, report: RunReport) -> LedgerEntry:
        entry = LedgerEntry.from_report(report)
        line = json.dumps(asdict(entry), ensure_ascii=False, sort_keys=True) + "\n"
        if self._full(len(line.encode("utf-8"))):
            self._archive()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(line)
        return entry

    def entries(self, limit: int = 20) -> list[LedgerEntry]:
        """The last `limit` runs of the live ledger, oldest first."""
        if limit <= 0:
            return []
        return list(self._scan())[-limit:]

    def latest(self) -> dict[str, LedgerEntry]:
        """Most recent run per experiment."""
        return {entry.experiment: entry for entry in self._scan()}

    def _scan(self) -> Iterator[LedgerEntry]:
        try:
            lines = self.path.read_text(encoding="utf-8").splitlines()
        except OSError:
            return
        for number, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError:
                logger.debug("ledger {} line {}: not JSON, skipped", self.path, number)
                continue
            entry = LedgerEntry.from_payload(payload) if isinstance(payload, dict) else None
            if entry is not None:
                yield entry

    def _full(self, incoming: int) -> bool:
        if self.max_bytes <= 0 or not self.path.exists():
            return False
        return self.path.stat().st_size + incoming > self.max_bytes

    def _archive(self) -> None:
        self.archive_dir.mkdir(parents=True, exist_ok=True)
        stamp = datetime.now(UTC).strftime("%Y%m%dT%H%M%S%fZ")
        self.path.replace(self.archive_dir / f"ledger-{stamp}.jsonl")
        if self.max_archives < 0:
            return
        archives = sorted(self.archive_dir.glob("ledger-*.jsonl"))
        for stale in archives[: max(0, len(archives) - self.max_archives)]:
            stale.unlink(missing_ok=True)
        logger.info("rotated run ledger, {} archives kept", min(len(archives), self.max_archives))
