"""
Edge density pi(Col(P)) of the family of P-colourable r-graphs.

Two estimates are always computed:

- simplex-optimization: max of q_P(y) = sum_{m in E} (r!/prod m_i!) prod y_i^(m_i)
  over the simplex (multi-start, alpha = 1 solver).
- finite-n-ratio: ex(Col(P), n) / binom(n, r) for n = r..N (a nonincreasing trace
  with limit pi), and the lower bracket r! ex / n^r <= pi. At n = l, 2l, ... with a
  proportional optimum the lower bracket is a polynomial of degree <= r in 1/n, so
  interpolating the last r+1 such points and evaluating at 1/n = 0 recovers pi.

`method` selects which of the two is reported as `value`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Literal

import numpy as np
from loguru import logger

from hyperturan.config.schema import Config
from hyperturan.patterns.construction import composition_edge_counts
from hyperturan.patterns.pattern import Pattern
from hyperturan.spectral.polynomial import MonomialObjective
from hyperturan.spectral.solver import maximize_on_sphere

DensityMethod = Literal["simplex-optimization", "finite-n-ratio"]

_TRACE_SLACK = 1e-12
_CROSS_CHECK_SLACK = 1e-9


@dataclass(frozen=True)
class DensityEstimate:
    value: float
    method: DensityMethod
    point: tuple[float, ...]
    simplex_value: float
    extrapolated: float | None = None
    trace: tuple[tuple[int, float], ...] = ()
    lower_trace: tuple[tuple[int, float], ...] = ()
    trace_nonincreasing: bool = True
    cross_check_ok: bool = True
    notes: tuple[str, ...] = field(default=())

    @property
    def last_ratio(self) -> float | None:
        return self.trace[-1][1] if self.trace else None

    def as_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "method": self.method,
            "point": list(self.point),
            "simplex_value": self.simplex_value,
            "extrapolated": self.extrapolated,
            "trace": [list(p) for p in self.trace],
            "lower_trace": [list(p) for p in self.lower_trace],
            "trace_nonincreasing": self.trace_nonincreasing,
            "cross_check_ok": self.cross_check_ok,
            "notes": list(self.notes),
        }


def density_objective(p: Pattern) -> MonomialObjective:
    """q_P as a monomial objective on the unweighted simplex."""
    coefficients = [
        math.factorial(p.r) / math.prod(math.factorial(k) for k in m) for m in p.edges
    ]
    return MonomialObjective(
        np.asarray(p.edges, dtype=np.int64).reshape(len(p.edges), p.l),
        np.asarray(coefficients, dtype=float),
        np.ones(p.l),
        degree=p.r,
    )


def simplex_density(p: Pattern, config: Config | None = None) -> tuple[float, tuple[float, ...]]:
    """max q_P over the simplex and the maximiser."""
    config = config or Config()
    if not p.edges:
        return 0.0, tuple([1.0 / p.l] * p.l)
    solver = config.solver.model_copy(
        update={
            "restarts": config.density.restarts,
            "tolerance": config.density.tolerance,
            "method": "simplex",
        }
    )
    solution, _ = maximize_on_sphere(density_objective(p), 1.0, solver)
    return solution.value, tuple(float(v) for v in solution.point)


def ex_col_count(p: Pattern, n: int) -> tuple[int, tuple[int, ...]]:
    """ex(Col(P), n) and the first composition (descending lexicographic order) attaining it."""
    comps, counts = composition_edge_counts(p, n)
    best = int(np.argmax(counts))
    return int(counts[best]), tuple(int(c) for c in comps[best])


def _extrapolate(p: Pattern, lower: dict[int, float], points: int, top: int) -> float | None:
    ns = [n for n in range(p.l, top + 1, p.l) if n >= p.r and n in lower][-points:]
    if len(ns) < points:
        return None
    xs = np.asarray([1.0 / n for n in ns])
    ys = np.asarray([lower[n] for n in ns])
    coefficients = np.polynomial.polynomial.polyfit(xs, ys, points - 1)
    return float(coefficients[0])


def pattern_density(
    p: Pattern, config: Config | None = None, method: DensityMethod = "simplex-optimization"
) -> DensityEstimate:
    """pi(Col(P)) with both estimates and their cross-check."""
    config = config or Config()
    simplex_value, point = simplex_density(p, config)

    points = config.density.extrapolation_points or p.r + 1
    first_multiple = max(1, math.ceil(p.r / p.l))
    top = max(config.density.max_n, p.l * (first_multiple + points - 1))
    trace: list[tuple[int, float]] = []
    lower: dict[int, float] = {}
    for n in range(p.r, top + 1):
        count, _ = ex_col_count(p, n)
        trace.append((n, count / math.comb(n, p.r)))
        lower[n] = math.factorial(p.r) * count / n**p.r
    monotone = all(b[1] <= a[1] + _TRACE_SLACK for a, b in zip(trace, trace[1:]))
    cross_ok = all(simplex_value <= ratio + _CROSS_CHECK_SLACK for _, ratio in trace)
    extrapolated = _extrapolate(p, lower, points, top)

    notes = []
    if not monotone:
        notes.append("finite-n ratio trace is not nonincreasing")
    if not cross_ok:
        notes.append("simplex value exceeds a finite-n ratio")
    if notes:
        logger.warning("density of {}: {}", p.label, "; ".join(notes))

    if method == "finite-n-ratio":
        value = extrapolated if extrapolated is not None else trace[-1][1]
    else:
        value = simplex_value
    return DensityEstimate(
        value=value,
        method=method,
        point=point,
        simplex_value=simplex_value,
        extrapolated=extrapolated,
        trace=tuple(trace),
        lower_trace=tuple(sorted(lower.items())),
        trace_nonincreasing=monotone,
        cross_check_ok=cross_ok,
        notes=tuple(notes),
    )
