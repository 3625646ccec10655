"""Subgraph containment (not necessarily induced) by backtracking."""

from __future__ import annotations

from collections.abc import Iterable

from hyperturan.errors import UniformityMismatchError
from hyperturan.hypergraph.core import Edge, Hypergraph


def _search_order(f: Hypergraph) -> list[int]:
    """Connectivity-greedy order: most already-placed neighbours, then degree, then index."""
    remaining = set(range(f.n))
    order: list[int] = []
    placed: set[int] = set()
    while remaining:
        best = min(
            remaining,
            key=lambda v: (-len(f.neighbors[v] & placed), -f.degree(v), v),
        )
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def _closing_edges(f: Hypergraph, order: list[int]) -> list[list[Edge]]:
    """For each position, the F-edges whose last vertex (in `order`) sits there."""
    position = {v: i for i, v in enumerate(order)}
    closing: list[list[Edge]] = [[] for _ in order]
    for edge in f.edges:
        closing[max(position[v] for v in edge)].append(edge)
    return closing


def find_embedding(h: Hypergraph, f: Hypergraph) -> dict[int, int] | None:
    """Injective map V(F) -> V(H) sending every edge of F onto an edge of H, or None."""
    if h.r != f.r:
        raise UniformityMismatchError(f"uniformity mismatch: host r={h.r}, pattern r={f.r}")
    if f.n > h.n or f.e > h.e:
        return None
    if f.n == 0:
        return {}

    order = _search_order(f)
    closing = _closing_edges(f, order)
    host_degree = [h.degree(v) for v in range(h.n)]
    image: dict[int, int] = {}
    used: set[int] = set()

    def candidates(v: int) -> Iterable[int]:
        placed_nbrs = [image[u] for u in f.neighbors[v] if u in image]
        if placed_nbrs:
            pool = set(h.neighbors[placed_nbrs[0]])
            for w in placed_nbrs[1:]:
                pool &= h.neighbors[w]
            pool = sorted(pool)
        else:
            pool = range(h.n)
        need = f.degree(v)
        return (c for c in pool if c not in used and host_degree[c] >= need)

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for c in candidates(v):
            image[v] = c
            if all(h.has_edge(image[u] for u in edge) for edge in closing[depth]):
                used.add(c)
                if extend(depth + 1):
                    return True
                used.discard(c)
            del image[v]
        return False

    return dict(image) if extend(0) else None


def contains_subgraph(h: Hypergraph, f: Hypergraph) -> bool:
    """True iff H has a (not necessarily induced) copy of F."""
    return find_embedding(h, f) is not None


def contains_any(h: Hypergraph, family: Iterable[Hypergraph]) -> bool:
    """True iff H contains some member of the family."""
    return any(contains_subgraph(h, f) for f in family)


def is_free(h: Hypergraph, family: Iterable[Hypergraph]) -> bool:
    """True iff H is F-free for every F in the family."""
    return not contains_any(h, family)
