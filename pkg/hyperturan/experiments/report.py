"""Run reports: per-check records rendered as JSON (schema 1) and a Markdown table."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Literal

from hyperturan.utils.helpers import ensure_dir, safe_filename

Provenance = Literal["PAPER", "TRIVIAL", "DERIVED"]
SCHEMA_VERSION = 1


def _finite(value: Any) -> Any:
    """JSON has no inf/nan; encode them as strings."""
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(v) for v in value]
    return value


@dataclass(slots=True)
class CheckRecord:
    claim: str
    computed: Any
    target: Any
    tolerance: float
    passed: bool
    provenance: Provenance
    location: str = ""


def check(
    claim: str,
    computed: float,
    target: float,
    *,
    tolerance: float = 0.0,
    provenance: Provenance = "DERIVED",
    location: str = "",
) -> CheckRecord:
    """Numeric record passing when |computed - target| <= tolerance."""
    passed = math.isfinite(computed) and abs(computed - target) <= tolerance
    return CheckRecord(claim, computed, target, tolerance, passed, provenance, location)


def flag(
    claim: str,
    passed: bool,
    *,
    computed: Any = None,
    target: Any = True,
    provenance: Provenance = "DERIVED",
    location: str = "",
) -> CheckRecord:
    """Boolean record; `computed` defaults to the flag itself."""
    value = passed if computed is None else computed
    return CheckRecord(claim, value, target, 0.0, bool(passed), provenance, location)


@dataclass(slots=True)
class RunReport:
    experiment: str
    title: str
    parameters: dict[str, Any]
    version: str
    records: list[CheckRecord] = field(default_factory=list)
    wall_time: float = 0.0
    notes: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.passed for r in self.records)

    @property
    def failures(self) -> int:
        return sum(not r.passed for r in self.records)

    def as_dict(self) -> dict[str, Any]:
        return _finite(
            {
                "schema": SCHEMA_VERSION,
                "experiment": self.experiment,
                "title": self.title,
                "version": self.version,
                "parameters": self.parameters,
                "passed": self.passed,
                "records": [asdict(r) for r in self.records],
                "notes": list(self.notes),
                "error": self.error,
                "wall_time": self.wall_time,
            }
        )

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_markdown(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"## {self.experiment}: {self.title} ({status})",
            "",
            "| claim | location | computed | target | tol | pass | provenance |",
            "|---|---|---|---|---|---|---|",
        ]
        for r in self.records:
            lines.append(
                f"| {r.claim} | {r.location} | {_cell(r.computed)} | {_cell(r.target)} "
                f"| {r.tolerance:g} | {'yes' if r.passed else 'NO'} | {r.provenance} |"
            )
        if self.error:
            lines += ["", f"Error: {self.error}"]
        for note in self.notes:
            lines += ["", f"- {note}"]
        return "\n".join(lines) + "\n"

    def write(self, output_dir: Path, *, markdown: bool = True) -> list[Path]:
        """Write `<experiment>.json` (and `.md`) under output_dir; returns the paths."""
        ensure_dir(output_dir)
        stem = safe_filename(self.experiment)
        paths = [output_dir / f"{stem}.json"]
        paths[0].write_text(self.to_json(), encoding="utf-8")
        if markdown:
            paths.append(output_dir / f"{stem}.md")
            paths[1].write_text(self.to_markdown(), encoding="utf-8")
        return paths


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value).replace("|", "/")
