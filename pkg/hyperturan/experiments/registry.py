"""
Experiment registry: the single source of truth for what `hyperturan verify` runs.

Adding an experiment:
  1. Write its body in hyperturan/experiments/checks.py.
  2. Add an ExperimentSpec to EXPERIMENTS below.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from loguru import logger

from hyperturan import __version__
from hyperturan.config.schema import Config
from hyperturan.errors import HyperturanError, UnknownExperimentError
from hyperturan.experiments import checks
from hyperturan.experiments.report import CheckRecord, RunReport


@dataclass(frozen=True)
class ExperimentSpec:
    """One reproducible experiment: parameters, seed and the body that checks them."""

    name: str
    title: str
    location: str  # where the claim comes from
    run: Callable[[Config, dict[str, Any]], list[CheckRecord]]
    parameters: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None  # required when the body draws random numbers
    notes: tuple[str, ...] = ()

    def params(self) -> dict[str, Any]:
        out = dict(self.parameters)
        if self.seed is not None:
            out["seed"] = self.seed
        return out


EXPERIMENTS: tuple[ExperimentSpec, ...] = (
    ExperimentSpec(
        name="lagrangian-closed-forms",
        title="lambda^(1)(K_l^r) = (l)_r / l^r for 2 <= r <= l <= 6",
        location="complete graph Lagrangian",
        run=checks.lagrangian_closed_forms,
        parameters={"max_l": 6, "tolerance": 1e-8},
    ),
    ExperimentSpec(
        name="density-closed-forms",
        title="pi(Col(K_l^r)) and pi(Col(chromatic(k, r))) by both methods",
        location="pattern densities of complete and chromatic patterns",
        run=checks.density_closed_forms,
        parameters={"max_l": 5, "max_k": 4, "max_r": 4, "tolerance": 1e-6},
    ),
    ExperimentSpec(
        name="oracle-spectra",
        title="lambda^(2) against the adjacency spectral radius; single-edge closed form",
        location="alpha = 2 on 2-graphs",
        run=checks.oracle_spectra,
        parameters={
            "graphs": 30,
            "max_n": 10,
            "tolerance": 1e-8,
            "edge_r": [2, 3, 4],
            "edge_alphas": [1.0, 1.5, 2.0, 3.0, 10.0],
        },
        seed=20240101,
    ),
    ExperimentSpec(
        name="alpha-monotonicity",
        title="lambda^(alpha) nondecreasing in alpha with limit r!e(G)",
        location="monotonicity and limit in alpha",
        run=checks.alpha_monotonicity,
        parameters={"graphs": 20, "max_n": {2: 8, 3: 5}, "grid_points": 12, "alpha_max": 100.0},
        seed=20240102,
        notes=(
            "3-graphs use n <= 5: at n = 8 a near-regular 3-graph has "
            "lambda^(100) close to r!e / 8^(3/100) < 0.95 r!e",
        ),
    ),
    ExperimentSpec(
        name="inequality-chain",
        title="uniform, density and flatness bounds on P-colourable graphs",
        location="uniform bound, density bound, edge density bound",
        run=checks.inequality_chain,
        parameters={"alphas": [1.0, 1.5, 2.0, 3.0, 5.0]},
        seed=20240103,
    ),
    ExperimentSpec(
        name="turan-r2",
        title="ex(n, K_3) = floor(n^2/4) with witness T_2(n), n <= 8",
        location="Turan's theorem for triangles",
        run=checks.turan_r2,
        parameters={"min_n": 3, "max_n": 8},
    ),
    ExperimentSpec(
        name="spectral-turan",
        title="SPEX over K_3-free graphs is {T_2(n)}; C_5-free at n = 7",
        location="spectral Turan theorem for colour-critical expansions",
        run=checks.spectral_turan,
        parameters={"alphas": [2.0, 3.0], "min_n": 5, "max_n": 8, "c5_n": 7},
        notes=(
            "C_5-free at n = 7 is an asymptotic instance: K_2 joined to 5 independent "
            "vertices has lambda^(2) = (1 + sqrt 41)/2 > sqrt 12, so only the bound "
            "SPEX >= lambda(T_2(7)) is checked",
        ),
    ),
    ExperimentSpec(
        name="partite-uniqueness",
        title="balanced complete l-partite r-graph uniquely maximises lambda^(alpha)",
        location="balanced complete partite is optimal",
        run=checks.partite_uniqueness,
        parameters={"cases": [[2, 2, 2.0, 2, 12], [3, 3, 3.0, 3, 9]]},
    ),
    ExperimentSpec(
        name="growth",
        title="growth inequality and fitted constants along spex_col",
        location="growth of spectral extremal graphs",
        run=checks.growth,
        parameters={"complete_range": [10, 40], "chromatic_range": [6, 14]},
    ),
    ExperimentSpec(
        name="balance",
        title="argmax composition of complete k-chromatic r-graphs is balanced",
        location="balanced partition of chromatic extremal graphs",
        run=checks.balance,
        parameters={"cases": [[2, 3, 2.0], [2, 3, 3.0], [3, 2, 2.0]], "max_n": 14},
    ),
    ExperimentSpec(
        name="spex-equals-ex",
        title="SPEX = EX = {T_2(n)} for Col(K_2^2), n in {4, 6, 8}",
        location="spectral and edge extremal sets agree",
        run=checks.spex_equals_ex,
        parameters={"ns": [4, 6, 8], "alpha": 2.0},
    ),
    ExperimentSpec(
        name="analytic-lemmas",
        title="monotone auxiliary function and the binomial step inequality",
        location="auxiliary inequalities of the growth argument",
        run=checks.analytic_lemmas,
        parameters={
            "fact1_alphas": [1.1, 2.0, 5.0],
            "fact1_rs": [2, 3, 5],
            "grid": 1000,
            "t5_alphas": [1.5, 2.0, 3.0],
            "t5_rs": [2, 3, 4],
            "m_cap": 10_000,
        },
    ),
    ExperimentSpec(
        name="closure-property",
        title="valid colourings survive induced subgraphs and blow-ups",
        location="Col(P) is hereditary and multiplicative",
        run=checks.closure_property,
        parameters={"triples": 200},
        seed=20240113,
    ),
    ExperimentSpec(
        name="eigenvector-structure",
        title="eigenvectors constant on twin classes; principal ratio 1 + O(1/n)",
        location="twins carry equal weight",
        run=checks.eigenvector_structure,
        parameters={"tolerance": 1e-6, "ratio_range": [6, 40]},
    ),
    ExperimentSpec(
        name="sequence-limit",
        title="normalised spex_col sequence decreases to 1/2; Lagrangian sequence increases",
        location="limit of the normalised spectral sequence",
        run=checks.sequence_limit,
        parameters={"complete_range": [4, 30], "triangle_range": [3, 12]},
    ),
)


def find_by_name(name: str) -> ExperimentSpec | None:
    """Find an experiment by name."""
    for spec in EXPERIMENTS:
        if spec.name == name:
            return spec
    return None


def resolve_experiments(name: str) -> list[ExperimentSpec]:
    """`all` or one registered name; unknown names raise UnknownExperimentError."""
    if name == "all":
        return list(EXPERIMENTS)
    spec = find_by_name(name)
    if spec is None:
        known = ", ".join(s.name for s in EXPERIMENTS)
        raise UnknownExperimentError(f"unknown experiment {name!r}; registered: {known}")
    return [spec]


def run_experiment(spec: ExperimentSpec, config: Config | None = None) -> RunReport:
    """Run one experiment; library errors are captured in the report instead of raised."""
    config = config or Config()
    report = RunReport(
        experiment=spec.name,
        title=spec.title,
        parameters=spec.params(),
        version=__version__,
        notes=list(spec.notes),
    )
    started = time.perf_counter()
    try:
        report.records = spec.run(config, spec.params())
    except HyperturanError as exc:
        logger.error("experiment {} failed: {}", spec.name, exc)
        report.error = f"{type(exc).__name__}: {exc}"
    report.wall_time = time.perf_counter() - started
    logger.info(
        "experiment {}: {} records, {} failures, {:.1f}s",
        spec.name, len(report.records), report.failures, report.wall_time,
    )
    return report
