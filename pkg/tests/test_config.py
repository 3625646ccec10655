"""Tests for the configuration schema and loader."""

import json

import pytest
from pydantic import ValidationError

from hyperturan.config.loader import (
    ConfigLoadError,
    env_overrides,
    file_config,
    load_config,
    read_config_data,
    save_config,
)
from hyperturan.config.schema import Config, EnumerationConfig, ReportConfig, SolverConfig


def test_defaults():
    config = Config()
    assert config.solver.tolerance == 1e-10
    assert config.solver.restarts == 32
    assert config.enumeration.iso_cap(2) == 10
    assert config.enumeration.iso_cap(5) == config.enumeration.iso_max_n_default
    assert config.output_path.name == "runs"


def test_camel_case_keys_are_accepted():
    solver = SolverConfig.model_validate({"maxIterations": 10, "powerShift": 0.0})
    assert solver.max_iterations == 10
    assert solver.power_shift == 0.0
    assert EnumerationConfig(brute_force_edge_cap=5).brute_force_edge_cap == 5


def test_invalid_values_are_rejected():
    with pytest.raises(ValidationError):
        SolverConfig(tolerance=0)
    with pytest.raises(ValidationError):
        SolverConfig(method="newton")
    with pytest.raises(ValidationError):
        ReportConfig(output_dir="   ")


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("HYPERTURAN_SOLVER__SEED", "7")
    assert Config().solver.seed == 7
    assert load_config(tmp_path / "missing.json").solver.seed == 7


def test_save_and_load_round_trip(tmp_path):
    path = tmp_path / "nested" / "config.json"
    config = Config()
    config.solver.seed = 42
    config.density.max_n = 12
    save_config(config, path)
    raw = json.loads(path.read_text())
    assert raw["solver"]["seed"] == 42
    assert "maxIterations" in raw["solver"]
    loaded = load_config(path)
    assert loaded.solver.seed == 42
    assert loaded.density.max_n == 12


def test_broken_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json")
    assert load_config(path).solver.seed == 0
    with pytest.raises(ConfigLoadError) as info:
        load_config(path, strict=True)
    assert info.value.path == path


def test_invalid_field_in_file_is_a_load_error(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"solver": {"restarts": 0}}))
    with pytest.raises(ConfigLoadError):
        load_config(path, strict=True)


def test_non_object_file_is_a_load_error(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("[1, 2]")
    with pytest.raises(ConfigLoadError, match="JSON object"):
        read_config_data(path)
    assert load_config(path).solver.restarts == 32


def test_env_overrides_recognise_known_fields_only():
    environ = {
        "HYPERTURAN_SOLVER__SEED": "7",
        "hyperturan_reports__output_dir": "/tmp/runs",
        "HYPERTURAN_SOLVER__NOPE": "1",
        "HYPERTURAN_WIDGETS__SEED": "1",
        "HYPERTURAN_SEED": "1",
        "PATH": "/bin",
    }
    assert env_overrides(environ) == {
        ("reports", "output_dir"): "/tmp/runs",
        ("solver", "seed"): "7",
    }


def test_file_config_ignores_the_environment(monkeypatch):
    monkeypatch.setenv("HYPERTURAN_SOLVER__SEED", "7")
    assert file_config({}).solver.seed == 0
    config = file_config({"solver": {"seed": 3, "maxIterations": 5}})
    assert config.solver.seed == 3
    assert config.solver.max_iterations == 5
    with pytest.raises(ValueError, match="solver"):
        file_config({"solver": 3})


def test_saved_file_keeps_environment_values_out(monkeypatch, tmp_path):
    monkeypatch.setenv("HYPERTURAN_SOLVER__SEED", "7")
    path = save_config(file_config({"density": {"maxN": 10}}), tmp_path / "config.json")
    raw = json.loads(path.read_text())
    assert raw["solver"]["seed"] == 0
    assert raw["density"]["maxN"] == 10
    assert list(tmp_path.iterdir()) == [path]
