"""
Alpha-spectral radius: maximise a Lagrangian over the unit alpha-sphere.

Three methods, all working on the generic `Objective` interface:

- power: shifted nonlinear power iteration
  y_i <- (grad_i / (r w_i) + tau * y_i^(alpha-1))^(1/(alpha-1)), tau = shift * P(y).
  Fixed points are exactly the eigenequation solutions. Default for alpha >= r,
  started from the uniform vector.
- projected-gradient: ascent on the sphere with an adaptive backtracking step,
  multi-start, then a shifted power polish. Default for 1 < alpha < r.
- simplex: alpha = 1. Projected gradient on the simplex z = w * y, then a
  multiplicative (Baum-Eagon) polish. Default for alpha = 1.

Restart results are merged deterministically: the largest value wins and ties are
broken by the lexicographically smallest vector rounded to 9 digits.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from hyperturan.config.schema import SolverConfig
from hyperturan.errors import SolverError
from hyperturan.hypergraph.core import Hypergraph
from hyperturan.spectral.polynomial import (
    EdgeObjective,
    Objective,
    normalize,
    stationarity_residual,
)
from hyperturan.spectral.types import SpectralEstimate, WeightVector

_MIN_STEP = 1e-18
_DECREASE_SLACK = 1e-13
_STAGNATION_WINDOW = 25
_HANDOVER_RESIDUAL = 1e-6
_MAX_SHIFT = 1e8
_STALL_ITERATIONS = 2000
_TIE = 1e-12


@dataclass(slots=True)
class SphereSolution:
    """Outcome of one restart (or of the merged solve)."""

    value: float
    point: np.ndarray
    residual: float
    iterations: int
    method: str
    converged: bool
    decreased: bool = False
    notes: list[str] = field(default_factory=list)


def simplex_projection(c: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {x >= 0, sum x = 1} (sort-based)."""
    a = -np.sort(-c)
    thresholds = (np.cumsum(a) - 1.0) / np.arange(1, c.size + 1)
    k = int(np.nonzero(a > thresholds)[0][-1])
    return np.maximum(c - thresholds[k], 0.0)


def resolve_method(alpha: float, r: int, method: str) -> str:
    """Pick the concrete method for `auto` and reject unusable combinations."""
    if not math.isfinite(alpha) or alpha < 1:
        raise SolverError(f"alpha must be a finite number >= 1, got {alpha}")
    if method == "auto":
        if alpha == 1:
            return "simplex"
        return "power" if alpha >= r else "projected-gradient"
    if method == "power" and alpha == 1:
        raise SolverError("power iteration needs alpha > 1")
    if method == "simplex" and alpha != 1:
        raise SolverError(f"simplex method solves alpha = 1 only, got {alpha}")
    return method


def _residual(objective: Objective, alpha: float, value: float, y: np.ndarray,
              config: SolverConfig, g: np.ndarray | None = None) -> float:
    return stationarity_residual(objective, alpha, value, y, config.support_threshold, g)


def _power(
    objective: Objective,
    alpha: float,
    y0: np.ndarray,
    config: SolverConfig,
    *,
    adaptive: bool,
    shift: float | None = None,
) -> SphereSolution:
    """Shifted power iteration; `adaptive` doubles the shift instead of giving up."""
    r, w = objective.degree, objective.weights
    exponent = 1.0 / (alpha - 1.0)
    y = normalize(objective, y0, alpha)
    if y is None:
        raise SolverError("cannot normalise the starting vector")
    value = objective.value(y)
    factor = config.power_shift if shift is None else shift
    best_res, since = math.inf, 0
    for it in range(1, config.max_iterations + 1):
        g = objective.gradient(y)
        res = _residual(objective, alpha, value, y, config, g)
        if res <= config.tolerance:
            return SphereSolution(value, y, res, it - 1, "power", True)
        if res < 0.999 * best_res:
            best_res, since = res, 0
        else:
            since += 1
            if since > _STALL_ITERATIONS:
                return SphereSolution(value, y, res, it, "power", False,
                                      notes=["power iteration stalled"])
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            base = g / (r * w) + factor * value * y ** (alpha - 1)
            top = base.max(initial=0.0)
            nxt = normalize(objective, (base / top) ** exponent, alpha) if top > 0 else None
        if nxt is None or not np.all(np.isfinite(nxt)):
            return SphereSolution(value, y, res, it, "power", False, decreased=True,
                                  notes=["power iteration broke down numerically"])
        new_value = objective.value(nxt)
        if new_value < value - _DECREASE_SLACK * max(1.0, value):
            if not adaptive or factor * 2 > _MAX_SHIFT:
                return SphereSolution(value, y, res, it, "power", False, decreased=True,
                                      notes=["objective decreased under power iteration"])
            factor = max(2 * factor, 1.0)
            continue
        y, value = nxt, new_value
    res = _residual(objective, alpha, value, y, config)
    return SphereSolution(value, y, res, config.max_iterations, "power", res <= config.tolerance)


def _multiplicative(objective: Objective, y0: np.ndarray, config: SolverConfig) -> SphereSolution:
    """alpha = 1 polish: y_i <- y_i * grad_i / (r w_i P), monotone on the simplex."""
    r, w = objective.degree, objective.weights
    y = y0.copy()
    value = objective.value(y)
    for it in range(1, config.max_iterations + 1):
        g = objective.gradient(y)
        res = _residual(objective, 1.0, value, y, config, g)
        if res <= config.tolerance or value <= 0:
            return SphereSolution(value, y, res, it - 1, "simplex", res <= config.tolerance)
        nxt = y * g / (r * w * value)
        nxt = nxt / float(np.sum(w * nxt))
        new_value = objective.value(nxt)
        if new_value < value - _DECREASE_SLACK * max(1.0, value):
            break
        y, value = nxt, new_value
    res = _residual(objective, 1.0, value, y, config)
    return SphereSolution(value, y, res, config.max_iterations, "simplex", res <= config.tolerance)


def _projected_gradient(
    objective: Objective, alpha: float, y0: np.ndarray, config: SolverConfig
) -> SphereSolution:
    """Ascent with adaptive step; hands over once close or stagnating."""
    w = objective.weights
    y = normalize(objective, y0, alpha)
    if y is None:
        raise SolverError("cannot normalise the starting vector")
    value = objective.value(y)
    step = config.initial_step
    stagnant = 0
    iterations = 0
    res = math.inf
    for iterations in range(1, config.max_iterations + 1):
        g = objective.gradient(y)
        res = _residual(objective, alpha, value, y, config, g)
        if res <= max(config.tolerance, _HANDOVER_RESIDUAL) or stagnant >= _STAGNATION_WINDOW:
            break
        improved = False
        while step >= _MIN_STEP:
            if alpha == 1:
                cand = simplex_projection(w * y + step * g / w) / w
            else:
                cand = normalize(objective, np.maximum(y + step * g, 0.0), alpha)
            if cand is not None:
                cand_value = objective.value(cand)
                if cand_value > value:
                    gain = cand_value - value
                    stagnant = stagnant + 1 if gain <= 1e-15 * max(1.0, value) else 0
                    y, value = cand, cand_value
                    step *= 2.0
                    improved = True
                    break
            step *= 0.5
        if not improved:
            break
    method = "simplex" if alpha == 1 else "projected-gradient"
    return SphereSolution(value, y, res, iterations, method, res <= config.tolerance)


def _run_restart(
    objective: Objective, alpha: float, method: str, y0: np.ndarray, config: SolverConfig
) -> SphereSolution:
    if method == "power":
        first = _power(objective, alpha, y0, config, adaptive=False)
        if not first.decreased:
            return first
        logger.warning("power iteration not monotone at alpha={}, using projected gradient", alpha)
        fallback = _projected_gradient(objective, alpha, first.point, config)
        polished = _polish(objective, alpha, fallback, config)
        polished.iterations += first.iterations
        polished.notes = [*first.notes, "fell back to projected gradient"]
        return polished
    ascent = _projected_gradient(objective, alpha, y0, config)
    return _polish(objective, alpha, ascent, config)


def _polish(
    objective: Objective, alpha: float, start: SphereSolution, config: SolverConfig
) -> SphereSolution:
    if start.converged:
        return start
    if alpha == 1:
        fine = _multiplicative(objective, start.point, config)
    else:
        fine = _power(objective, alpha, start.point, config, adaptive=True,
                      shift=max(config.power_shift, 1.0))
    if fine.value < start.value - _DECREASE_SLACK * max(1.0, start.value):
        return start
    fine.iterations += start.iterations
    fine.method = start.method
    return fine


def starting_points(
    objective: Objective, alpha: float, count: int, seed: int, *, faces: bool
) -> list[np.ndarray]:
    """Uniform first, then seeded Dirichlet points, alternating with random faces."""
    d, w = objective.dim, objective.weights
    rng = np.random.default_rng(seed)
    points = [np.ones(d)]
    for k in range(1, count):
        z = np.zeros(d)
        if faces and k % 2 == 0 and d > 1:
            size = int(rng.integers(min(objective.degree, d), d + 1))
            support = rng.choice(d, size=size, replace=False)
            z[support] = rng.dirichlet(np.ones(size))
        else:
            z = rng.dirichlet(np.ones(d))
        points.append((z / w) ** (1.0 / alpha))
    return points


def _better(candidate: SphereSolution, incumbent: SphereSolution | None) -> bool:
    if incumbent is None:
        return True
    scale = _TIE * max(1.0, abs(incumbent.value))
    if candidate.value > incumbent.value + scale:
        return True
    if candidate.value < incumbent.value - scale:
        return False
    return tuple(np.round(candidate.point, 9)) < tuple(np.round(incumbent.point, 9))


def maximize_on_sphere(
    objective: Objective,
    alpha: float,
    config: SolverConfig | None = None,
    *,
    extra_starts: tuple[np.ndarray, ...] = (),
) -> tuple[SphereSolution, int]:
    """Best restart for max P(y) s.t. sum_i w_i y_i^alpha = 1; returns (solution, restarts).

    `extra_starts` (e.g. the optimum at a smaller alpha) run after the uniform start.
    """
    config = config or SolverConfig()
    method = resolve_method(alpha, objective.degree, config.method)
    count = 1 if method == "power" else config.restarts
    points = starting_points(
        objective, alpha, count, config.seed, faces=method != "power" and alpha < objective.degree
    )
    warm = (np.asarray(p, dtype=float) for p in extra_starts)
    points[1:1] = [p for p in warm if p.shape == (objective.dim,) and np.any(p > 0)]

    def run(y0: np.ndarray) -> SphereSolution:
        return _run_restart(objective, alpha, method, y0, config)

    if config.threads > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(run, points))
    else:
        results = [run(p) for p in points]

    best: SphereSolution | None = None
    for idx, result in enumerate(results):
        if not np.isfinite(result.value):
            raise SolverError(f"restart {idx} produced a non-finite value")
        logger.debug(
            "restart {}: value={:.12g} residual={:.3g} method={}",
            idx, result.value, result.residual, result.method,
        )
        if _better(result, best):
            best = result
    assert best is not None
    if alpha == 1:
        best = _clean_support(objective, best, config)
    return best, len(results)


def _clean_support(
    objective: Objective, solution: SphereSolution, config: SolverConfig
) -> SphereSolution:
    """Report coordinates below the support threshold as exact zeros (alpha = 1)."""
    point = np.where(solution.point < config.support_threshold, 0.0, solution.point)
    point = normalize(objective, point, 1.0)
    if point is None:
        return solution
    value = objective.value(point)
    residual = _residual(objective, 1.0, value, point, config)
    return SphereSolution(
        value, point, residual, solution.iterations, solution.method,
        residual <= config.tolerance, solution.decreased, solution.notes,
    )


def _uniform(n: int, alpha: float) -> np.ndarray:
    return np.full(n, n ** (-1.0 / alpha)) if n else np.zeros(0)


def alpha_spectral_radius(
    h: Hypergraph,
    alpha: float,
    config: SolverConfig | None = None,
    *,
    warm_start: np.ndarray | None = None,
) -> SpectralEstimate:
    """lambda^(alpha)(H) = max P_H(x) over nonnegative x with ||x||_alpha = 1."""
    config = config or SolverConfig()
    method = resolve_method(alpha, h.r, config.method)
    if h.e == 0:
        return SpectralEstimate(
            value=0.0,
            vector=WeightVector(_uniform(h.n, alpha), alpha),
            residual=0.0,
            iterations=0,
            restarts_used=0,
            method="trivial",
            converged=True,
        )
    starts = () if warm_start is None else (np.asarray(warm_start, dtype=float),)
    solution, restarts = maximize_on_sphere(EdgeObjective(h), alpha, config, extra_starts=starts)
    if not solution.converged:
        logger.warning(
            "alpha={} solve on n={} e={} stopped with residual {:.3g} (method {})",
            alpha, h.n, h.e, solution.residual, method,
        )
    return SpectralEstimate(
        value=solution.value,
        vector=WeightVector(solution.point, alpha),
        residual=solution.residual,
        iterations=solution.iterations,
        restarts_used=restarts,
        method=solution.method,
        converged=solution.converged,
        notes=tuple(solution.notes),
    )
