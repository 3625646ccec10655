"""Experiment registry, run reports and the run ledger."""

from hyperturan.experiments.ledger import LedgerEntry, RunLedger
from hyperturan.experiments.registry import (
    EXPERIMENTS,
    ExperimentSpec,
    find_by_name,
    resolve_experiments,
    run_experiment,
)
from hyperturan.experiments.report import CheckRecord, RunReport

__all__ = [
    "EXPERIMENTS",
    "CheckRecord",
    "ExperimentSpec",
    "LedgerEntry",
    "RunLedger",
    "RunReport",
    "find_by_name",
    "resolve_experiments",
    "run_experiment",
]
