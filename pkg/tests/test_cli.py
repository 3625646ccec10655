"""Tests for the hyperturan command line."""

import json

import pytest
from typer.testing import CliRunner

from hyperturan import __version__
from hyperturan.cli.commands import app

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Keep ~/.hyperturan out of the tests."""
    monkeypatch.setenv("HOME", str(tmp_path))
    for key in ("HYPERTURAN_SOLVER__SEED", "HYPERTURAN_SOLVER__THREADS"):
        monkeypatch.delenv(key, raising=False)
    return tmp_path


def _value(output: str, label: str) -> float:
    for line in output.splitlines():
        if line.startswith(label):
            return float(line.split("=", 1)[1].split()[0])
    raise AssertionError(f"{label!r} not in output:\n{output}")


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_spectral_radius_of_triangle():
    result = runner.invoke(app, ["spectral", "--builtin", "K_3", "--alpha", "2"])
    assert result.exit_code == 0
    assert _value(result.stdout, "lambda") == pytest.approx(2.0, abs=1e-9)


def test_spectral_radius_of_single_edge_as_json():
    result = runner.invoke(app, ["--json", "spectral", "-b", "edge:r=3", "-a", "1"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["lambda"] == pytest.approx(2 / 9, abs=1e-9)
    assert payload["e"] == 1


def test_spectral_needs_exactly_one_source(tmp_path):
    assert runner.invoke(app, ["spectral"]).exit_code == 1
    path = tmp_path / "g.hg"
    path.write_text("hg 3 2 1\n0 1\n")
    result = runner.invoke(app, ["spectral", "-b", "K_3", "-f", str(path)])
    assert result.exit_code == 1


def test_malformed_file_exits_with_usage_error(tmp_path):
    path = tmp_path / "bad.hg"
    path.write_text("hg 3 2 1\n0 7\n")
    result = runner.invoke(app, ["spectral", "--file", str(path)])
    assert result.exit_code == 1
    assert "Error" in result.stdout


def test_binary_file_exits_with_usage_error(tmp_path):
    path = tmp_path / "bad.hg"
    path.write_bytes(b"hg 3 2 1\n\xff\xfe 1\n")
    result = runner.invoke(app, ["spectral", "--file", str(path)])
    assert result.exit_code == 1
    assert "not UTF-8" in result.stdout


def test_invalid_alpha_is_a_numeric_error():
    result = runner.invoke(app, ["spectral", "-b", "K_3", "--alpha", "0.5"])
    assert result.exit_code == 2


def test_sweep_writes_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    result = runner.invoke(app, ["sweep", "-b", "C_5", "--alphas", "1,2,4", "-o", str(out)])
    assert result.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "alpha,lambda,residual"
    assert len(lines) == 4
    assert float(lines[2].split(",")[1]) == pytest.approx(2.0, abs=1e-8)


def test_construct_turan_graph():
    result = runner.invoke(app, ["construct", "turan", "--n", "6", "--l", "3", "--r", "2"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "hg 6 2 12"


def test_construct_unknown_builder():
    result = runner.invoke(app, ["construct", "fano"])
    assert result.exit_code == 1


def test_density_of_chromatic_pattern():
    result = runner.invoke(app, ["density", "--pattern", "chromatic:k=2,r=3"])
    assert result.exit_code == 0
    assert _value(result.stdout, "pi") == pytest.approx(0.75, abs=1e-6)


def test_density_rejects_unknown_method():
    result = runner.invoke(app, ["density", "-p", "complete:l=2,r=2", "--method", "guess"])
    assert result.exit_code == 1


def test_extremal_turan_number():
    result = runner.invoke(
        app, ["--json", "extremal", "--n", "5", "-F", "K_3", "--kind", "ex"]
    )
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["optimum"] == 6
    assert len(payload["witnesses"]) == 1


def test_extremal_over_a_pattern():
    result = runner.invoke(app, ["extremal", "--n", "6", "-p", "complete:l=2,r=2"])
    assert result.exit_code == 0
    assert "3-3" in result.stdout


def test_extremal_argument_validation():
    assert runner.invoke(app, ["extremal", "--n", "5"]).exit_code == 1
    assert runner.invoke(app, ["extremal", "--n", "5", "-F", "K_3", "--kind", "max"]).exit_code == 1
    assert runner.invoke(
        app, ["extremal", "--n", "5", "-F", "K_3", "-p", "complete:l=2,r=2"]
    ).exit_code == 1


def test_verify_unknown_experiment(tmp_path):
    result = runner.invoke(app, ["verify", "nosuch", "--output-dir", str(tmp_path)])
    assert result.exit_code == 1
    assert "lagrangian-closed-forms" in result.stdout


def test_verify_writes_reports_and_ledger(tmp_path):
    out = tmp_path / "runs"
    result = runner.invoke(app, ["verify", "lagrangian-closed-forms", "--output-dir", str(out)])
    assert result.exit_code == 0
    report = json.loads((out / "lagrangian-closed-forms.json").read_text())
    assert report["passed"] is True
    assert (out / "lagrangian-closed-forms.md").exists()

    history = runner.invoke(app, ["experiments", "history", "--output-dir", str(out)])
    assert history.exit_code == 0
    assert "Last 1 run" in history.stdout
    entry = json.loads((out / "ledger.jsonl").read_text().splitlines()[-1])
    assert entry["experiment"] == "lagrangian-closed-forms"
    assert entry["passed"] is True


def test_experiments_list():
    result = runner.invoke(app, ["experiments", "list"])
    assert result.exit_code == 0
    assert "Experiments" in result.stdout
    assert "20240101" in result.stdout


def test_broken_config_file_is_a_usage_error(isolated_home):
    config_dir = isolated_home / ".hyperturan"
    config_dir.mkdir()
    (config_dir / "config.json").write_text("{broken")
    result = runner.invoke(app, ["spectral", "-b", "K_3"])
    assert result.exit_code == 1
    assert "Failed to load config" in result.stdout


def test_config_init_creates_refreshes_and_resets(isolated_home):
    path = isolated_home / ".hyperturan" / "config.json"
    result = runner.invoke(app, ["config", "init"])
    assert result.exit_code == 0
    assert "Created config" in result.stdout
    raw = json.loads(path.read_text())
    assert raw["solver"]["maxIterations"] == 100_000

    raw["solver"]["seed"] = 9
    del raw["density"]
    path.write_text(json.dumps(raw))
    result = runner.invoke(app, ["config", "init"])
    assert result.exit_code == 0
    refreshed = json.loads(path.read_text())
    assert refreshed["solver"]["seed"] == 9
    assert refreshed["density"]["restarts"] == 64

    assert runner.invoke(app, ["config", "init", "--force"]).exit_code == 0
    assert json.loads(path.read_text())["solver"]["seed"] == 0


def test_config_init_refuses_a_broken_file(isolated_home):
    config_dir = isolated_home / ".hyperturan"
    config_dir.mkdir()
    (config_dir / "config.json").write_text("{broken")
    result = runner.invoke(app, ["config", "init"])
    assert result.exit_code == 1
    assert "--force" in result.stdout
    assert runner.invoke(app, ["config", "init", "--force"]).exit_code == 0


def test_config_show_reports_environment_overrides(monkeypatch):
    monkeypatch.setenv("HYPERTURAN_SOLVER__SEED", "5")
    result = runner.invoke(app, ["config", "show"])
    assert result.exit_code == 0
    assert "HYPERTURAN_SOLVER__SEED" in result.stdout
    payload = json.loads(runner.invoke(app, ["--json", "config", "show"]).stdout)
    assert payload["solver"]["seed"] == 5
