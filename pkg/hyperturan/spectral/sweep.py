"""Alpha sweeps, vector statistics and closed-form brackets."""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Sequence

import numpy as np
from loguru import logger

from hyperturan.config.schema import SolverConfig
from hyperturan.errors import ParseError, SolverError
from hyperturan.hypergraph.core import Hypergraph
from hyperturan.spectral.solver import alpha_spectral_radius
from hyperturan.spectral.types import SpectralEstimate, VectorStats, WeightVector


def alpha_sweep(
    h: Hypergraph, alpha_grid: Sequence[float], config: SolverConfig | None = None
) -> list[SpectralEstimate]:
    """Solve along a sorted alpha grid, warm-starting each point from the previous optimum.

    For alpha' > alpha the previous optimum rescaled to the alpha'-sphere already
    has a value >= the previous one, so the reported values are nondecreasing.
    """
    grid = [float(a) for a in alpha_grid]
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise SolverError("alpha grid must be sorted ascending")
    if grid and grid[0] < 1:
        raise SolverError(f"alpha must be >= 1, got {grid[0]}")
    estimates: list[SpectralEstimate] = []
    previous: np.ndarray | None = None
    for alpha in grid:
        estimate = alpha_spectral_radius(h, alpha, config, warm_start=previous)
        estimates.append(estimate)
        previous = estimate.vector.values.copy()
        logger.debug("sweep alpha={} lambda={:.12g}", alpha, estimate.value)
    return estimates


def vector_stats(x: WeightVector | np.ndarray | Sequence[float]) -> VectorStats:
    """x_min, x_max and principal ratio gamma = x_max / x_min (inf when x_min = 0)."""
    values = x.values if isinstance(x, WeightVector) else np.asarray(x, dtype=float)
    if values.size == 0:
        return VectorStats(0.0, 0.0, 1.0)
    x_min, x_max = float(values.min()), float(values.max())
    ratio = math.inf if x_min <= 0 else x_max / x_min
    return VectorStats(x_min, x_max, ratio)


def spectral_radius_bounds(h: Hypergraph, alpha: float) -> tuple[float, float]:
    """(r! e / n^(r/alpha), r! e): the uniform-vector lower bound and the alpha -> inf limit."""
    if alpha < 1:
        raise SolverError(f"alpha must be >= 1, got {alpha}")
    top = math.factorial(h.r) * h.e
    if h.n == 0:
        return 0.0, 0.0
    return top / h.n ** (h.r / alpha), float(top)


def parse_alpha_grid(text: str) -> list[float]:
    """`1,2,4`, `start:stop:log[:points]` or `start:stop:lin[:points]` (12 points by default)."""
    text = text.strip()
    try:
        if ":" not in text:
            return sorted(float(a) for a in text.split(",") if a.strip())
        parts = text.split(":")
        start, stop = float(parts[0]), float(parts[1])
        scale = parts[2] if len(parts) > 2 else "lin"
        points = int(parts[3]) if len(parts) > 3 else 12
    except (ValueError, IndexError):
        raise ParseError(f"cannot parse alpha grid {text!r}") from None
    if points < 1 or stop < start:
        raise ParseError(f"empty alpha grid {text!r}")
    if scale == "log":
        if start <= 0:
            raise ParseError("log grids need a positive start")
        grid = np.geomspace(start, stop, points)
    elif scale == "lin":
        grid = np.linspace(start, stop, points)
    else:
        raise ParseError(f"unknown grid scale {scale!r} (use lin or log)")
    grid[0], grid[-1] = start, stop
    return [float(a) for a in grid]


def sweep_csv(estimates: Sequence[SpectralEstimate]) -> str:
    """CSV with columns alpha,lambda,residual."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["alpha", "lambda", "residual"])
    for estimate in estimates:
        writer.writerow([repr(float(v)) for v in (estimate.alpha, estimate.value, estimate.residual)])
    return buffer.getvalue()
