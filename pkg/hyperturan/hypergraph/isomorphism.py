"""
Canonical labeling, isomorphism testing and transposition orbits.

Canonical forms use individualization-refinement: colour refinement on link
signatures, then branching on the first non-singleton cell. Branches whose vertex is
a swap-twin of an already explored one are skipped (the transposition is an
automorphism fixing the current colouring, so both subtrees yield the same leaves).
The search is exact and refuses orders above the configured cap.
"""

from __future__ import annotations

from collections import Counter

from hyperturan.errors import InfeasibleInstanceError
from hyperturan.hypergraph.core import Edge, Hypergraph, VertexPartition

DEFAULT_MAX_N = 12

CanonicalForm = tuple[int, int, tuple[Edge, ...]]


def are_twins(h: Hypergraph, u: int, v: int) -> bool:
    """True iff swapping u and v maps E(H) onto itself."""
    if u == v:
        return True
    if h.degree(u) != h.degree(v):
        return False
    link_u = {s for s in h.links[u] if v not in s}
    link_v = {s for s in h.links[v] if u not in s}
    return link_u == link_v


def transposition_orbits(h: Hypergraph) -> VertexPartition:
    """Blocks of the transitive closure of the swap-twin relation."""
    parent = list(range(h.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(h.n):
        for v in range(u + 1, h.n):
            if find(u) != find(v) and are_twins(h, u, v):
                parent[find(v)] = find(u)
    blocks: dict[int, list[int]] = {}
    for v in range(h.n):
        blocks.setdefault(find(v), []).append(v)
    return VertexPartition(blocks=tuple(tuple(b) for b in sorted(blocks.values())))


def _refine(h: Hypergraph, colors: list[int]) -> list[int]:
    """Equitable refinement; colours stay ranked so cell order is preserved."""
    count = len(set(colors))
    while True:
        signatures = []
        for v in range(h.n):
            neighbourhood = sorted(
                tuple(sorted(colors[u] for u in h.edges[idx] if u != v))
                for idx in h.incidence[v]
            )
            signatures.append((colors[v], tuple(neighbourhood)))
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        colors = [ranking[sig] for sig in signatures]
        if len(ranking) == count:
            return colors
        count = len(ranking)


def _certificate(h: Hypergraph, colors: list[int]) -> tuple[Edge, ...]:
    return tuple(sorted(tuple(sorted(colors[v] for v in e)) for e in h.edges))


def canonical_form(h: Hypergraph, max_n: int = DEFAULT_MAX_N) -> CanonicalForm:
    """(n, r, canonical edge list); equal for two graphs iff they are isomorphic."""
    if h.n > max_n:
        raise InfeasibleInstanceError(
            f"canonical form is exact only up to n={max_n}, got n={h.n}"
        )
    best: tuple[Edge, ...] | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(h, colors)
        sizes = Counter(colors)
        target = min((c for c, k in sizes.items() if k > 1), default=None)
        if target is None:
            cert = _certificate(h, colors)
            if best is None or cert < best:
                best = cert
            return
        tried: list[int] = []
        for v in (u for u in range(h.n) if colors[u] == target):
            if any(are_twins(h, v, w) for w in tried):
                continue
            tried.append(v)
            search([2 * c if u == v else 2 * c + 1 for u, c in enumerate(colors)])

    search([0] * h.n)
    return (h.n, h.r, best if best is not None else ())


def canonical_graph(h: Hypergraph, max_n: int = DEFAULT_MAX_N) -> Hypergraph:
    """The canonical representative of H's isomorphism class."""
    n, r, edges = canonical_form(h, max_n)
    return Hypergraph(n=n, r=r, edges=edges)


def is_isomorphic(h1: Hypergraph, h2: Hypergraph, max_n: int = DEFAULT_MAX_N) -> bool:
    if (h1.n, h1.r, h1.e) != (h2.n, h2.r, h2.e):
        return False
    if sorted(h1.degree(v) for v in h1.vertices) != sorted(h2.degree(v) for v in h2.vertices):
        return False
    return canonical_form(h1, max_n) == canonical_form(h2, max_n)
