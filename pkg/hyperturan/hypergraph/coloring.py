"""Proper colourings of 2-graphs: chromatic number and colour-criticality."""

from __future__ import annotations

from hyperturan.errors import UniformityMismatchError
from hyperturan.hypergraph.core import Hypergraph, remove_edge


def _require_graph(f: Hypergraph) -> None:
    if f.r != 2:
        raise UniformityMismatchError(f"chromatic number is defined here for 2-graphs, got r={f.r}")


def clique_number(f: Hypergraph) -> int:
    """Size of a largest clique (Bron-Kerbosch with pivoting)."""
    _require_graph(f)
    best = 0

    def expand(size: int, candidates: set[int], excluded: set[int]) -> None:
        nonlocal best
        if not candidates and not excluded:
            best = max(best, size)
            return
        if size + len(candidates) <= best:
            return
        pivot = max(candidates | excluded, key=lambda u: len(f.neighbors[u] & candidates))
        for v in sorted(candidates - f.neighbors[pivot]):
            expand(size + 1, candidates & f.neighbors[v], excluded & f.neighbors[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand(0, set(range(f.n)), set())
    return best


def find_coloring(f: Hypergraph, k: int) -> tuple[int, ...] | None:
    """A proper colouring with colours 0..k-1, or None (DSATUR-ordered backtracking)."""
    _require_graph(f)
    if f.n == 0:
        return ()
    if k <= 0:
        return None
    colors = [-1] * f.n

    def pick() -> int:
        best, best_key = -1, (-1, -1)
        for v in range(f.n):
            if colors[v] >= 0:
                continue
            saturation = len({colors[u] for u in f.neighbors[v] if colors[u] >= 0})
            key = (saturation, len(f.neighbors[v]))
            if key > best_key:
                best, best_key = v, key
        return best

    def assign(placed: int, used: int) -> bool:
        if placed == f.n:
            return True
        v = pick()
        blocked = {colors[u] for u in f.neighbors[v]}
        # a fresh colour is interchangeable with any other unused one
        for c in range(min(k, used + 1)):
            if c in blocked:
                continue
            colors[v] = c
            if assign(placed + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return tuple(colors) if assign(0, 0) else None


def chromatic_number(f: Hypergraph) -> int:
    """chi(F) by increasing k from the clique lower bound."""
    _require_graph(f)
    if f.n == 0:
        return 0
    k = max(1, clique_number(f))
    while find_coloring(f, k) is None:
        k += 1
    return k


def is_color_critical(f: Hypergraph, l: int) -> bool:
    """chi(F) = l and deleting some single edge drops chi to l - 1."""
    if chromatic_number(f) != l:
        return False
    return any(chromatic_number(remove_edge(f, e)) == l - 1 for e in f.edges)
