"""
Lagrangian polynomials and the eigenequation residual.

The solver maximises a polynomial with nonnegative coefficients, homogeneous of
degree r, over the weighted sphere sum_i w_i y_i^alpha = 1. Two objectives share that
interface: `EdgeObjective` (the Lagrangian of a hypergraph, all w_i = 1) and
`MonomialObjective` (the symmetry-reduced Lagrangian of a class structure, w_i = class
sizes). At a stationary point grad_i = r * lambda * w_i * y_i^(alpha - 1).
"""

from __future__ import annotations

import math
from typing import Protocol

import numpy as np

from hyperturan.errors import DimensionMismatchError, SolverError
from hyperturan.hypergraph.core import Hypergraph


class Objective(Protocol):
    """Homogeneous nonnegative polynomial on a weighted alpha-sphere."""

    dim: int
    degree: int
    weights: np.ndarray

    def value(self, y: np.ndarray) -> float: ...

    def gradient(self, y: np.ndarray) -> np.ndarray: ...


def _as_vector(x: np.ndarray | list[float], dim: int) -> np.ndarray:
    vec = np.asarray(x, dtype=float)
    if vec.ndim != 1 or vec.size != dim:
        raise DimensionMismatchError(f"expected a vector of length {dim}, got shape {vec.shape}")
    if not np.all(np.isfinite(vec)):
        raise SolverError("vector has non-finite entries")
    return vec


class EdgeObjective:
    """P_H(x) = r! * sum over edges of the product of their entries."""

    def __init__(self, h: Hypergraph):
        self.dim = h.n
        self.degree = h.r
        self.weights = np.ones(h.n)
        self.edges = h.edge_array
        self.coefficient = float(math.factorial(h.r))

    def value(self, y: np.ndarray) -> float:
        if self.edges.shape[0] == 0:
            return 0.0
        return self.coefficient * float(np.prod(y[self.edges], axis=1).sum())

    def gradient(self, y: np.ndarray) -> np.ndarray:
        grad = np.zeros(self.dim)
        if self.edges.shape[0] == 0:
            return grad
        entries = y[self.edges]
        for j in range(self.degree):
            others = np.prod(np.delete(entries, j, axis=1), axis=1)
            np.add.at(grad, self.edges[:, j], others)
        return self.coefficient * grad


class MonomialObjective:
    """sum_k c_k * prod_i y_i^(M_ki) with nonnegative c and integer exponents of row sum r."""

    def __init__(
        self,
        exponents: np.ndarray,
        coefficients: np.ndarray,
        weights: np.ndarray,
        degree: int,
    ):
        self.weights = np.asarray(weights, dtype=float)
        self.dim = self.weights.size
        self.coefficients = np.asarray(coefficients, dtype=float)
        self.exponents = np.asarray(exponents, dtype=np.int64).reshape(
            self.coefficients.size, self.dim
        )
        self.degree = degree
        if np.any(self.exponents.sum(axis=1) != degree):
            raise DimensionMismatchError(f"every monomial must have degree {degree}")

    def value(self, y: np.ndarray) -> float:
        if self.coefficients.size == 0:
            return 0.0
        return float(np.sum(self.coefficients * np.prod(y**self.exponents, axis=1)))

    def gradient(self, y: np.ndarray) -> np.ndarray:
        grad = np.zeros(self.dim)
        for i in range(self.dim):
            rows = self.exponents[:, i] > 0
            if not rows.any():
                continue
            reduced = self.exponents[rows].copy()
            reduced[:, i] -= 1
            terms = self.coefficients[rows] * self.exponents[rows, i]
            grad[i] = float(np.sum(terms * np.prod(y**reduced, axis=1)))
        return grad


def weighted_norm(objective: Objective, y: np.ndarray, alpha: float) -> float:
    return float(np.sum(objective.weights * y**alpha) ** (1.0 / alpha))


def normalize(objective: Objective, y: np.ndarray, alpha: float) -> np.ndarray | None:
    """Scale y onto the weighted alpha-sphere; None for the zero vector."""
    norm = weighted_norm(objective, y, alpha)
    if not np.isfinite(norm) or norm <= 0:
        return None
    return y / norm


def stationarity_residual(
    objective: Objective,
    alpha: float,
    lam: float,
    y: np.ndarray,
    support_threshold: float = 0.0,
    gradient: np.ndarray | None = None,
) -> float:
    """Eigenequation defect; for alpha = 1 the KKT defect on the weighted simplex."""
    g = objective.gradient(y) if gradient is None else gradient
    scaled = g / (objective.degree * objective.weights) if objective.degree else g
    supported = y > support_threshold
    if alpha == 1:
        inside = np.abs(scaled[supported] - lam)
        outside = np.maximum(scaled[~supported] - lam, 0.0)
        return float(max(inside.max(initial=0.0), outside.max(initial=0.0)))
    defect = np.abs(lam * y[supported] ** (alpha - 1) - scaled[supported])
    return float(defect.max(initial=0.0))


def lagrangian_poly(h: Hypergraph, x: np.ndarray | list[float]) -> float:
    """P_H(x) = r! * sum_{e in E(H)} prod_{v in e} x_v (no normalisation applied)."""
    return EdgeObjective(h).value(_as_vector(x, h.n))


def poly_gradient(h: Hypergraph, x: np.ndarray | list[float]) -> np.ndarray:
    """grad_i P_H(x) = r! * sum over edges e containing i of prod_{v in e - i} x_v."""
    return EdgeObjective(h).gradient(_as_vector(x, h.n))


def eigen_residual(
    h: Hypergraph,
    alpha: float,
    lam: float,
    x: np.ndarray | list[float],
    support_threshold: float = 0.0,
) -> float:
    """max_i |lam * x_i^(alpha-1) - (r-1)! * sum_{e containing i} x_{e-i}| over supported i."""
    if alpha < 1:
        raise SolverError(f"alpha must be >= 1, got {alpha}")
    return stationarity_residual(
        EdgeObjective(h), alpha, lam, _as_vector(x, h.n), support_threshold
    )
