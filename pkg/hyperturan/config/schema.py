"""Configuration schema using Pydantic."""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic.alias_generators import to_camel
from pydantic_settings import BaseSettings

SolverMethod = Literal["auto", "power", "projected-gradient", "simplex"]


class Base(BaseModel):
    """Base model that accepts both camelCase and snake_case keys."""

    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)


class SolverConfig(Base):
    """Tolerances and budgets of the alpha-spectral solver.

    Every tolerance the solver uses lives here so that a run is reproducible
    from its config alone.
    """

    tolerance: float = Field(default=1e-10, gt=0)  # eigenequation residual target
    max_iterations: int = Field(default=100_000, ge=1)  # per restart
    restarts: int = Field(default=32, ge=1)
    seed: int = 0
    method: SolverMethod = "auto"
    power_shift: float = Field(default=0.5, ge=0)  # tau = power_shift * P(x)
    initial_step: float = Field(default=1.0, gt=0)
    support_threshold: float = Field(default=1e-9, ge=0)  # smaller entries reported as zero
    threads: int = Field(default=1, ge=1)


class EnumerationConfig(Base):
    """Guardrails for exhaustive and isomorphism-reduced enumeration."""

    exhaustive_edge_cap: int = 36  # binom(n, r) limit for exhaustive mode
    iso_max_n: dict[int, int] = Field(default_factory=lambda: {2: 10, 3: 7})
    iso_max_n_default: int = 6
    isomorphism_max_n: int = 12
    brute_force_edge_cap: int = 20  # spex_col cross-check limit
    homomorphism_node_budget: int = 2_000_000

    def iso_cap(self, r: int) -> int:
        return self.iso_max_n.get(r, self.iso_max_n_default)


class DensityConfig(Base):
    """Pattern density estimation settings."""

    restarts: int = Field(default=64, ge=1)
    tolerance: float = Field(default=1e-10, gt=0)
    max_n: int = Field(default=24, ge=2)  # finite-n trace cap
    extrapolation_points: int | None = None  # None = r + 1


class ReportConfig(Base):
    """Where and how run reports are written."""

    output_dir: str = "~/.hyperturan/runs"
    write_markdown: bool = True
    ledger_max_bytes: int = 256 * 1024
    ledger_max_archives: int = 5

    @model_validator(mode="after")
    def validate_output_dir(self) -> "ReportConfig":
        """Require a non-empty output directory."""
        self.output_dir = self.output_dir.strip()
        if not self.output_dir:
            raise ValueError("reports.output_dir must be non-empty")
        return self


class Config(BaseSettings):
    """Root configuration for hyperturan."""

    solver: SolverConfig = Field(default_factory=SolverConfig)
    enumeration: EnumerationConfig = Field(default_factory=EnumerationConfig)
    density: DensityConfig = Field(default_factory=DensityConfig)
    reports: ReportConfig = Field(default_factory=ReportConfig)

    @property
    def output_path(self) -> Path:
        """Get expanded report output directory."""
        return Path(self.reports.output_dir).expanduser()

    model_config = ConfigDict(env_prefix="HYPERTURAN_", env_nested_delimiter="__")
