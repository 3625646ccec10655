"""Result types of the alpha-spectral solver."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Nonnegative vertex weights normalised to unit alpha-norm."""

    values: np.ndarray
    alpha: float

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def x_min(self) -> float:
        return float(self.values.min()) if self.values.size else 0.0

    @property
    def x_max(self) -> float:
        return float(self.values.max()) if self.values.size else 0.0

    @property
    def norm(self) -> float:
        return float(np.sum(self.values**self.alpha) ** (1.0 / self.alpha))

    def support(self, threshold: float = 0.0) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.values > threshold))

    def __len__(self) -> int:
        return int(self.values.size)

    def as_list(self) -> list[float]:
        return [float(v) for v in self.values]


@dataclass(frozen=True, eq=False)
class SpectralEstimate:
    """Best (lambda, x) pair found by a solve, with its eigenequation residual."""

    value: float
    vector: WeightVector
    residual: float
    iterations: int
    restarts_used: int
    method: str
    converged: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def alpha(self) -> float:
        return self.vector.alpha

    def as_dict(self) -> dict[str, Any]:
        """Flat record used in JSON reports."""
        return {
            "lambda": self.value,
            "alpha": self.alpha,
            "residual": self.residual,
            "iterations": self.iterations,
            "restarts": self.restarts_used,
            "method": self.method,
            "converged": self.converged,
            "vector": self.vector.as_list(),
        }


@dataclass(frozen=True, slots=True)
class VectorStats:
    """x_min, x_max and the principal ratio x_max / x_min (inf when x_min is 0)."""

    x_min: float
    x_max: float
    principal_ratio: float

    def as_dict(self) -> dict[str, Any]:
        ratio: float | str = "inf" if math.isinf(self.principal_ratio) else self.principal_ratio
        return {"x_min": self.x_min, "x_max": self.x_max, "principal_ratio": ratio}
