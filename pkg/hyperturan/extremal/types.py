"""Report types of the extremal searches and audits."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

from hyperturan.hypergraph.core import Hypergraph
from hyperturan.hypergraph.textio import format_hypergraph

ReportKind = Literal["EX", "SPEX"]
SearchMode = Literal["exhaustive", "iso", "colorable-candidates"]

# every asymptotic statement is audited at finite n only
EVIDENCE_NOTE = "finite-n evidence, not proof"


@dataclass(frozen=True)
class Witness:
    """One extremal graph with its solve data (vector and composition when known)."""

    graph: Hypergraph
    value: float
    vector: tuple[float, ...] = ()
    composition: tuple[int, ...] | None = None
    converged: bool = True

    def as_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "graph": format_hypergraph(self.graph),
            "vector": list(self.vector),
            "composition": None if self.composition is None else list(self.composition),
            "converged": self.converged,
        }


@dataclass(frozen=True)
class ExtremalReport:
    """EX (edge count) or SPEX (alpha-spectral radius) optimum with all its witnesses."""

    kind: ReportKind
    n: int
    r: int
    optimum: float
    witnesses: tuple[Witness, ...]
    mode: SearchMode
    alpha: float | None = None
    audit: dict[str, bool] = field(default_factory=dict)
    graphs_scanned: int = 0
    notes: tuple[str, ...] = ()

    @property
    def graphs(self) -> tuple[Hypergraph, ...]:
        return tuple(w.graph for w in self.witnesses)

    @property
    def passed(self) -> bool:
        return all(self.audit.values())

    def as_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "n": self.n,
            "r": self.r,
            "alpha": self.alpha,
            "optimum": self.optimum,
            "mode": self.mode,
            "graphs_scanned": self.graphs_scanned,
            "audit": dict(self.audit),
            "witnesses": [w.as_dict() for w in self.witnesses],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class SequenceTrace:
    """lambda_n (or ex_n) over a range of n, with lambda_n * n^(r/alpha) / (n)_r."""

    alpha: float
    r: int
    values: tuple[tuple[int, float], ...]
    normalized: tuple[float, ...]
    monotone: bool
    direction: Literal["nonincreasing", "nondecreasing"]
    bracket: tuple[float, float]

    def as_dict(self) -> dict[str, Any]:
        return {
            "alpha": self.alpha,
            "r": self.r,
            "values": [list(v) for v in self.values],
            "normalized": list(self.normalized),
            "monotone": self.monotone,
            "direction": self.direction,
            "bracket": list(self.bracket),
        }


@dataclass(frozen=True)
class AuditReport:
    """Named boolean checks plus the numbers behind them."""

    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    values: dict[str, Any] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": dict(self.checks),
            "values": dict(self.values),
            "notes": list(self.notes),
        }
