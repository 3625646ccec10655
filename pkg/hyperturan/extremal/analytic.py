"""Closed-form inequalities used by the growth argument, checked numerically."""

from __future__ import annotations

import math

import numpy as np
from loguru import logger
from scipy.special import comb

from hyperturan.errors import SolverError


def _require(alpha: float, r: int) -> None:
    if alpha <= 1:
        raise SolverError(f"alpha must be > 1, got {alpha}")
    if r < 2:
        raise SolverError(f"r must be >= 2, got {r}")


def fact1_values(alpha: float, r: int, grid_size: int = 1000) -> tuple[np.ndarray, np.ndarray]:
    """f(x) = (1 - r x) / (1 - x)^(r/alpha) on a uniform grid of [0, 1)."""
    _require(alpha, r)
    x = np.linspace(0.0, 1.0, grid_size, endpoint=False)
    return x, (1.0 - r * x) / (1.0 - x) ** (r / alpha)


def fact1_check(alpha: float, r: int, grid_size: int = 1000) -> bool:
    """True iff f is strictly decreasing along the grid."""
    _, f = fact1_values(alpha, r, grid_size)
    return bool(np.all(np.diff(f) < 0))


def lemma_t5_gap(alpha: float, r: int, i: int, m: np.ndarray | list[int]) -> np.ndarray:
    """LHS - RHS of

        binom(m+1, i) (m/(m+1))^(i/alpha) - binom(m, i)
            >= binom(m-1, i-1) (1 - 1/alpha - 1/(alpha (m - r + 1)))

    for each m (m >= r).
    """
    _require(alpha, r)
    if not 1 <= i <= r:
        raise SolverError(f"need 1 <= i <= r, got i={i}, r={r}")
    ms = np.asarray(m, dtype=float)
    if np.any(ms < r):
        raise SolverError(f"m must be >= r={r}")
    shrink = np.exp(-(i / alpha) * np.log1p(1.0 / ms))
    lhs = comb(ms + 1, i) * shrink - comb(ms, i)
    rhs = comb(ms - 1, i - 1) * (1.0 - 1.0 / alpha - 1.0 / (alpha * (ms - r + 1)))
    return lhs - rhs


def lemma_t5_threshold(alpha: float, r: int, i: int, m_cap: int = 10_000) -> int | None:
    """Least m <= m_cap from which the inequality holds for every m' in [m, m_cap].

    None when it fails at m_cap, i.e. the inequality has not stabilised yet.
    """
    ms = np.arange(r, m_cap + 1)
    holds = lemma_t5_gap(alpha, r, i, ms) >= 0
    if not holds[-1]:
        logger.warning("alpha={} r={} i={}: inequality fails at m_cap={}", alpha, r, i, m_cap)
        return None
    failing = np.flatnonzero(~holds)
    return int(ms[failing[-1] + 1]) if failing.size else int(ms[0])


def xmin_log_bound(n: int, alpha: float, r: int) -> float:
    """(1/n)(1 - alpha / ((alpha - 1) r log n)), the minimum-entry lower bound on x_min^alpha."""
    _require(alpha, r)
    if n < 2:
        raise SolverError(f"n must be >= 2, got {n}")
    return (1.0 - alpha / ((alpha - 1.0) * r * math.log(n))) / n
