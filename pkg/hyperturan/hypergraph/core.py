"""Uniform hypergraph data model and the basic structural operations."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product

import numpy as np

from hyperturan.errors import (
    DuplicateEdgeError,
    EdgeSizeError,
    InvalidHypergraphError,
    InvalidMultiplicityError,
    VertexRangeError,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices 0..n-1.

    Instances are immutable; build them with `new_hypergraph` (validating) or
    `Hypergraph.from_sorted` (trusted, already canonical input).
    """

    n: int
    r: int
    edges: tuple[Edge, ...]
    _edge_set: frozenset[Edge] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    @classmethod
    def from_sorted(cls, n: int, r: int, edges: Iterable[Edge]) -> Hypergraph:
        """Build from edges that are already sorted tuples; only the order is normalised."""
        return cls(n=n, r=r, edges=tuple(sorted(edges)))

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an (e, r) integer array; shape (0, r) when empty."""
        if not self.edges:
            return np.zeros((0, self.r), dtype=np.intp)
        return np.asarray(self.edges, dtype=np.intp)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the edges containing it."""
        at: list[list[int]] = [[] for _ in range(self.n)]
        for idx, edge in enumerate(self.edges):
            for v in edge:
                at[v].append(idx)
        return tuple(tuple(ids) for ids in at)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        """2-shadow neighbourhoods: vertices sharing at least one edge."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for edge in self.edges:
            for v in edge:
                nbrs[v].update(edge)
        for v in range(self.n):
            nbrs[v].discard(v)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def links(self) -> tuple[frozenset[Edge], ...]:
        """Link of each vertex: the (r-1)-sets e - v for edges e containing v."""
        out: list[set[Edge]] = [set() for _ in range(self.n)]
        for edge in self.edges:
            for v in edge:
                out[v].add(tuple(u for u in edge if u != v))
        return tuple(frozenset(s) for s in out)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def __len__(self) -> int:
        return self.e


@dataclass(frozen=True, slots=True)
class DegreeProfile:
    """Per-vertex degrees and the minimum degree."""

    degrees: tuple[int, ...]

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.degrees else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.degrees else 0

    @property
    def total(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True, slots=True)
class VertexPartition:
    """Disjoint vertex blocks covering 0..n-1."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def is_balanced(self) -> bool:
        if not self.blocks:
            return True
        lo, hi = self.n // len(self.blocks), -(-self.n // len(self.blocks))
        return all(lo <= s <= hi for s in self.sizes)

    def block_of(self) -> tuple[int, ...]:
        """Vertex -> block index map."""
        owner = [0] * self.n
        for idx, block in enumerate(self.blocks):
            for v in block:
                owner[v] = idx
        return tuple(owner)

    @classmethod
    def consecutive(cls, sizes: Sequence[int]) -> VertexPartition:
        """Blocks of the given sizes laid out on consecutive vertices."""
        blocks: list[tuple[int, ...]] = []
        start = 0
        for size in sizes:
            blocks.append(tuple(range(start, start + size)))
            start += size
        return cls(blocks=tuple(blocks))


def new_hypergraph(n: int, r: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and build an r-uniform hypergraph on 0..n-1."""
    if r < 2:
        raise InvalidHypergraphError(f"uniformity must be >= 2, got {r}")
    if n < 0:
        raise InvalidHypergraphError(f"vertex count must be >= 0, got {n}")
    seen: set[Edge] = set()
    for raw in edges:
        vertices = list(raw)
        edge = tuple(sorted(set(vertices)))
        if len(vertices) != r or len(edge) != r:
            raise EdgeSizeError(f"edge of wrong size: {vertices} (expected {r} distinct vertices)")
        if edge[0] < 0 or edge[-1] >= n:
            raise VertexRangeError(f"vertex out of range in edge {vertices} (n={n})")
        if edge in seen:
            raise DuplicateEdgeError(f"duplicate edge {edge}")
        seen.add(edge)
    return Hypergraph.from_sorted(n, r, seen)


def empty_hypergraph(n: int, r: int) -> Hypergraph:
    return Hypergraph(n=n, r=r, edges=())


def degrees(h: Hypergraph) -> DegreeProfile:
    """Degree of every vertex."""
    return DegreeProfile(degrees=tuple(len(ids) for ids in h.incidence))


def induced_subgraph(h: Hypergraph, subset: Iterable[int]) -> Hypergraph:
    """Subgraph induced by `subset`, relabeled 0..|S|-1 in increasing vertex order."""
    kept = sorted(set(subset))
    for v in kept:
        if not 0 <= v < h.n:
            raise VertexRangeError(f"vertex {v} not in hypergraph of order {h.n}")
    relabel = {v: i for i, v in enumerate(kept)}
    edges = (
        tuple(relabel[v] for v in edge)
        for edge in h.edges
        if all(v in relabel for v in edge)
    )
    return Hypergraph.from_sorted(len(kept), h.r, edges)


def delete_vertex(h: Hypergraph, v: int) -> Hypergraph:
    """H - v."""
    if not 0 <= v < h.n:
        raise VertexRangeError(f"vertex {v} not in hypergraph of order {h.n}")
    return induced_subgraph(h, (u for u in range(h.n) if u != v))


def remove_edge(h: Hypergraph, edge: Iterable[int]) -> Hypergraph:
    """H - e (e must be present)."""
    target = tuple(sorted(edge))
    if not h.has_edge(target):
        raise InvalidHypergraphError(f"edge {target} not present")
    return Hypergraph(n=h.n, r=h.r, edges=tuple(e for e in h.edges if e != target))


def relabel(h: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Image of H under the vertex map v -> perm[v]."""
    if sorted(perm) != list(range(h.n)):
        raise InvalidHypergraphError("relabeling must be a permutation of 0..n-1")
    return Hypergraph.from_sorted(h.n, h.r, (tuple(sorted(perm[v] for v in e)) for e in h.edges))


def blow_up_class_map(t: Sequence[int]) -> tuple[int, ...]:
    """Vertex -> original-vertex map of a blow-up with multiplicities t."""
    return tuple(i for i, k in enumerate(t) for _ in range(k))


def blow_up(h: Hypergraph, t: Sequence[int]) -> Hypergraph:
    """Blow-up H(t): vertex i becomes a class of t_i consecutive vertices."""
    if len(t) != h.n:
        raise InvalidMultiplicityError(f"need {h.n} multiplicities, got {len(t)}")
    if any(int(k) != k or k < 1 for k in t):
        raise InvalidMultiplicityError(f"multiplicities must be positive integers: {list(t)}")
    classes = VertexPartition.consecutive([int(k) for k in t]).blocks
    edges: list[Edge] = []
    for edge in h.edges:
        # classes are consecutive and edge vertices increasing, so products are sorted
        edges.extend(product(*(classes[v] for v in edge)))
    return Hypergraph.from_sorted(sum(int(k) for k in t), h.r, edges)


def expansion(f: Hypergraph, r: int) -> Hypergraph:
    """r-expansion F^(r) of a 2-graph: each edge gets r-2 fresh vertices of its own."""
    if f.r != 2:
        raise InvalidHypergraphError("expansion is defined for 2-graphs")
    if r < 2:
        raise InvalidHypergraphError(f"uniformity must be >= 2, got {r}")
    if r == 2:
        return f
    next_vertex = f.n
    edges: list[Edge] = []
    for edge in f.edges:
        fresh = tuple(range(next_vertex, next_vertex + r - 2))
        next_vertex += r - 2
        edges.append((*edge, *fresh))
    return Hypergraph.from_sorted(next_vertex, r, edges)


def clone_move(h: Hypergraph, u: int, v: int) -> Hypergraph:
    """H_{u->v}: drop every edge at u, then copy v's edges (not containing u) onto u."""
    for w in (u, v):
        if not 0 <= w < h.n:
            raise VertexRangeError(f"vertex {w} not in hypergraph of order {h.n}")
    if u == v:
        return h
    kept = {e for e in h.edges if u not in e}
    for edge in h.edges:
        if v in edge and u not in edge:
            kept.add(tuple(sorted(u if w == v else w for w in edge)))
    return Hypergraph.from_sorted(h.n, h.r, kept)


def is_edge_maximal(h: Hypergraph, predicate: Callable[[Hypergraph], bool]) -> bool:
    """True iff adding any absent r-set breaks `predicate`."""
    for edge in combinations(range(h.n), h.r):
        if edge in h._edge_set:
            continue
        grown = Hypergraph.from_sorted(h.n, h.r, (*h.edges, edge))
        if predicate(grown):
            return False
    return True