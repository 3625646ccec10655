"""Maximal P-colourable graphs and the vertex-cloning step."""

from __future__ import annotations

import math
from collections.abc import Sequence
from itertools import combinations, product

import numpy as np
from scipy.special import comb

from hyperturan.errors import DimensionMismatchError, EmptyClassError, InvalidColoringError
from hyperturan.hypergraph.core import Edge, Hypergraph, VertexPartition
from hyperturan.patterns.homomorphism import Coloring
from hyperturan.patterns.pattern import Pattern
from hyperturan.utils.helpers import weak_compositions


def maximal_colorable(class_sizes: Sequence[int], p: Pattern) -> tuple[Hypergraph, Coloring]:
    """All r-sets whose colour multiset is allowed, classes on consecutive vertices."""
    sizes = [int(s) for s in class_sizes]
    if len(sizes) != p.l:
        raise DimensionMismatchError(f"pattern has {p.l} colours, got {len(sizes)} class sizes")
    if any(s < 0 for s in sizes):
        raise DimensionMismatchError(f"class sizes must be nonnegative: {sizes}")
    blocks = VertexPartition.consecutive(sizes).blocks
    edges: list[Edge] = []
    for m in p.edges:
        if any(m[i] > sizes[i] for i in range(p.l)):
            continue
        choices = [combinations(blocks[i], m[i]) for i in range(p.l)]
        for parts in product(*choices):
            edges.append(tuple(sorted(v for part in parts for v in part)))
    coloring = Coloring(tuple(i for i, s in enumerate(sizes) for _ in range(s)), p.l)
    return Hypergraph.from_sorted(sum(sizes), p.r, edges), coloring


def maximal_colorable_edges(class_sizes: Sequence[int], p: Pattern) -> int:
    """sum_{m in E} prod_i binom(n_i, m_i), without building the graph."""
    return sum(math.prod(math.comb(n_i, m_i) for n_i, m_i in zip(class_sizes, m)) for m in p.edges)


def clone_vertex(h: Hypergraph, phi: Coloring, j: int) -> tuple[Hypergraph, Coloring]:
    """Add vertex k = n in colour j, with e - v + k for every edge e and v in e of colour j."""
    if len(phi.colors) != h.n:
        raise InvalidColoringError(f"colouring covers {len(phi.colors)} of {h.n} vertices")
    if not 0 <= j < phi.l:
        raise InvalidColoringError(f"colour {j} outside 0..{phi.l - 1}")
    members = set(phi.color_class(j))
    if not members:
        raise EmptyClassError(f"colour class {j} is empty")
    k = h.n
    edges = set(h.edges)
    for edge in h.edges:
        for v in edge:
            if v in members:
                edges.add(tuple(sorted((*(u for u in edge if u != v), k))))
    return Hypergraph.from_sorted(h.n + 1, h.r, edges), Coloring((*phi.colors, j), phi.l)


def composition_edge_counts(p: Pattern, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Every weak composition of n into l parts and the edge count of its maximal graph.

    Compositions come in lexicographically descending order; counts are exact
    integers held in float64.
    """
    comps = np.asarray(list(weak_compositions(n, p.l)), dtype=np.int64).reshape(-1, p.l)
    if not p.edges:
        return comps, np.zeros(comps.shape[0])
    multiplicities = np.asarray(p.edges, dtype=np.int64)
    per_class = comb(comps[:, None, :], multiplicities[None, :, :])
    return comps, np.rint(per_class.prod(axis=2).sum(axis=1))
