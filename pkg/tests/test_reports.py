"""Tests for run reports, the run ledger and the experiment registry."""

import json

import pytest

from hyperturan.config.schema import Config
from hyperturan.errors import SolverError, UnknownExperimentError
from hyperturan.experiments import (
    EXPERIMENTS,
    ExperimentSpec,
    LedgerEntry,
    RunLedger,
    RunReport,
    find_by_name,
    resolve_experiments,
    run_experiment,
)
from hyperturan.experiments.report import check, flag


def _report(*records):
    return RunReport("demo", "Demo run", {"n": 3}, "0.1.0", list(records))


def test_check_uses_absolute_tolerance():
    assert check("close", 1.0 + 1e-9, 1.0, tolerance=1e-8).passed
    assert not check("far", 1.1, 1.0, tolerance=1e-8).passed
    assert not check("nan", float("nan"), 1.0, tolerance=1.0).passed


def test_flag_defaults_computed_to_the_flag():
    record = flag("holds", True, provenance="TRIVIAL")
    assert record.computed is True
    assert record.target is True
    assert flag("count", False, computed=3, target=0).computed == 3


def test_report_passes_only_without_failures_or_error():
    good = _report(flag("a", True), check("b", 2.0, 2.0))
    assert good.passed and good.failures == 0
    assert not _report(flag("a", False)).passed
    broken = _report(flag("a", True))
    broken.error = "SolverError: boom"
    assert not broken.passed


def test_report_json_schema():
    payload = json.loads(_report(check("ratio", float("inf"), 1.0)).to_json())
    assert payload["schema"] == 1
    assert payload["experiment"] == "demo"
    assert payload["passed"] is False
    assert payload["records"][0]["computed"] == "inf"
    assert set(payload) >= {"parameters", "records", "version", "wall_time", "notes", "error"}


def test_report_markdown_table():
    report = _report(check("lambda", 2.0, 2.0, location="triangle"), flag("maximal", False))
    report.notes.append("finite-n evidence only")
    text = report.to_markdown()
    assert text.startswith("## demo: Demo run (FAIL)")
    assert "| lambda | triangle | 2 | 2 | 0 | yes | DERIVED |" in text
    assert "| NO |" in text
    assert text.rstrip().endswith("- finite-n evidence only")


def test_report_write(tmp_path):
    paths = _report(flag("a", True)).write(tmp_path / "out")
    assert [p.name for p in paths] == ["demo.json", "demo.md"]
    assert json.loads(paths[0].read_text())["passed"] is True
    assert len(_report().write(tmp_path, markdown=False)) == 1


def test_ledger_records_and_reads_back(tmp_path):
    ledger = RunLedger(tmp_path)
    for i in range(3):
        report = _report(flag("a", i != 1))
        report.experiment = f"e{i}"
        ledger.append(report)
    entries = ledger.entries(2)
    assert [e.experiment for e in entries] == ["e1", "e2"]
    assert entries[0].passed is False
    assert entries[0].checks == 1 and entries[0].failures == 1
    assert entries[1].ts


def test_ledger_latest_keeps_last_run_per_experiment(tmp_path):
    ledger = RunLedger(tmp_path)
    ledger.append(_report(flag("a", False)))
    ledger.append(_report(flag("a", True)))
    latest = ledger.latest()
    assert list(latest) == ["demo"]
    assert latest["demo"].passed


def test_ledger_skips_corrupt_lines(tmp_path):
    ledger = RunLedger(tmp_path)
    ledger.append(_report(flag("a", True)))
    with ledger.path.open("a") as handle:
        handle.write("{not json\n\n[1, 2]\n{\"event\": \"other\"}\n")
    assert [e.experiment for e in ledger.entries()] == ["demo"]
    assert RunLedger(tmp_path / "missing").entries() == []


def test_ledger_entry_from_payload():
    entry = LedgerEntry.from_payload({"ts": "t", "experiment": "x", "passed": True})
    assert entry == LedgerEntry("t", "x", True, 0, 0, 0.0, "")
    assert LedgerEntry.from_payload({"experiment": "x"}) is None


def test_ledger_rotates_into_archives(tmp_path):
    ledger = RunLedger(tmp_path, max_bytes=300, max_archives=1)
    for i in range(12):
        report = _report(flag("a", True))
        report.experiment = f"experiment-{i}"
        ledger.append(report)
    archives = list(ledger.archive_dir.glob("ledger-*.jsonl"))
    assert len(archives) == 1
    assert ledger.path.stat().st_size <= 300


def test_registry_names_are_unique():
    names = [spec.name for spec in EXPERIMENTS]
    assert len(names) == len(set(names))
    assert find_by_name("turan-r2") is not None
    assert find_by_name("nosuch") is None


def test_randomised_experiments_are_seeded():
    for name in ("oracle-spectra", "alpha-monotonicity", "inequality-chain", "closure-property"):
        spec = find_by_name(name)
        assert spec.seed is not None
        assert spec.params()["seed"] == spec.seed


def test_resolve_experiments():
    assert len(resolve_experiments("all")) == len(EXPERIMENTS)
    assert [s.name for s in resolve_experiments("balance")] == ["balance"]
    with pytest.raises(UnknownExperimentError) as info:
        resolve_experiments("nosuch")
    assert "lagrangian-closed-forms" in str(info.value)
    assert info.value.exit_code == 1


def test_run_experiment_captures_library_errors():
    def explode(config, params):
        raise SolverError("did not converge")

    spec = ExperimentSpec("exploding", "Always fails", "nowhere", explode)
    report = run_experiment(spec)
    assert report.error == "SolverError: did not converge"
    assert not report.passed
    assert report.wall_time >= 0


def test_run_cheap_experiment():
    report = run_experiment(find_by_name("lagrangian-closed-forms"), Config())
    assert report.passed
    assert len(report.records) == 15
    assert all(r.provenance == "PAPER" for r in report.records)
