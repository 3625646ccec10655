"""Symmetry-reduced solves: one weight per vertex class of a maximal class structure.

All vertices of a class of a maximal P-colorable graph are pairwise swap-twins, and for
alpha >= r the principal eigenvector is constant on them, so the full problem
collapses to at most l variables:

    P(y) = r! * sum_{m in E} prod_i binom(n_i, m_i) * y_i^(m_i),  sum_i n_i y_i^alpha = 1.

For alpha < r the class-constant optimum is a lower bound of the full one; the
estimate carries a note saying so.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import TYPE_CHECKING

import numpy as np

from hyperturan.config.schema import SolverConfig
from hyperturan.errors import DimensionMismatchError
from hyperturan.spectral.polynomial import MonomialObjective
from hyperturan.spectral.solver import maximize_on_sphere, resolve_method
from hyperturan.spectral.types import SpectralEstimate, WeightVector

if TYPE_CHECKING:
    from hyperturan.patterns.pattern import Pattern


def _multiplicities(structure: Pattern | Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    edges = getattr(structure, "edges", structure)
    return [tuple(int(m) for m in edge) for edge in edges]


def reduced_objective(
    class_sizes: Sequence[int], structure: Pattern | Sequence[tuple[int, ...]], r: int
) -> tuple[MonomialObjective, list[int]]:
    """Reduced Lagrangian over the nonempty classes, plus their original indices."""
    sizes = [int(s) for s in class_sizes]
    multiplicities = _multiplicities(structure)
    for m in multiplicities:
        if len(m) != len(sizes):
            raise DimensionMismatchError(
                f"multiplicity vector {m} does not match {len(sizes)} classes"
            )
        if sum(m) != r:
            raise DimensionMismatchError(f"multiplicity vector {m} does not sum to r={r}")
    active = [i for i, s in enumerate(sizes) if s > 0]
    exponents, coefficients = [], []
    for m in multiplicities:
        count = math.prod(math.comb(sizes[i], m[i]) for i in range(len(sizes)))
        if count == 0:
            continue
        exponents.append([m[i] for i in active])
        coefficients.append(math.factorial(r) * count)
    objective = MonomialObjective(
        np.asarray(exponents, dtype=np.int64).reshape(len(coefficients), len(active)),
        np.asarray(coefficients, dtype=float),
        np.asarray([sizes[i] for i in active], dtype=float),
        degree=r,
    )
    return objective, active


def lift(class_sizes: Sequence[int], class_values: Sequence[float]) -> np.ndarray:
    """Full vertex vector, classes laid out consecutively."""
    return np.repeat(np.asarray(class_values, dtype=float), [int(s) for s in class_sizes])


def symmetric_spectral_radius(
    class_sizes: Sequence[int],
    structure: Pattern | Sequence[tuple[int, ...]],
    alpha: float,
    config: SolverConfig | None = None,
    *,
    r: int | None = None,
) -> SpectralEstimate:
    """lambda^(alpha) of maximal_colorable(class_sizes, structure) via the reduced problem."""
    config = config or SolverConfig()
    multiplicities = _multiplicities(structure)
    if r is None:
        r = getattr(structure, "r", None) or (sum(multiplicities[0]) if multiplicities else 2)
    resolve_method(alpha, r, config.method)
    if getattr(structure, "l", len(class_sizes)) != len(class_sizes):
        raise DimensionMismatchError(
            f"structure has {structure.l} colours but {len(class_sizes)} class sizes were given"
        )
    objective, active = reduced_objective(class_sizes, multiplicities, r)
    n = sum(int(s) for s in class_sizes)
    notes = ["class-constant restriction; a lower bound for alpha < r"] if alpha < r else []
    if objective.coefficients.size == 0:
        uniform = np.full(n, n ** (-1.0 / alpha)) if n else np.zeros(0)
        return SpectralEstimate(0.0, WeightVector(uniform, alpha), 0.0, 0, 0, "trivial", True)
    solution, restarts = maximize_on_sphere(objective, alpha, config)
    values = np.zeros(len(class_sizes))
    values[active] = solution.point
    return SpectralEstimate(
        value=solution.value,
        vector=WeightVector(lift(class_sizes, values), alpha),
        residual=solution.residual,
        iterations=solution.iterations,
        restarts_used=restarts,
        method=f"symmetric-{solution.method}",
        converged=solution.converged,
        notes=tuple([*notes, *solution.notes]),
    )
