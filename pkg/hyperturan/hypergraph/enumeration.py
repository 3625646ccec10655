"""Exhaustive and isomorphism-reduced enumeration of r-graphs on n vertices."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from itertools import combinations
from typing import Literal

from loguru import logger

from hyperturan.config.schema import EnumerationConfig
from hyperturan.errors import InfeasibleInstanceError, InvalidHypergraphError
from hyperturan.hypergraph.core import Edge, Hypergraph, is_edge_maximal
from hyperturan.hypergraph.isomorphism import CanonicalForm, canonical_form

EnumerationMode = Literal["exhaustive", "iso", "auto"]
Predicate = Callable[[Hypergraph], bool]


def _accept_all(_: Hypergraph) -> bool:
    return True


def resolve_mode(n: int, r: int, mode: EnumerationMode, config: EnumerationConfig) -> str:
    """Pick a concrete mode for "auto": iso when n is under its cap, else exhaustive."""
    if mode != "auto":
        check_feasible(n, r, mode, config)
        return mode
    if n <= min(config.iso_cap(r), config.isomorphism_max_n):
        return "iso"
    check_feasible(n, r, "exhaustive", config)
    return "exhaustive"


def check_feasible(n: int, r: int, mode: EnumerationMode, config: EnumerationConfig) -> None:
    """Raise InfeasibleInstanceError when (n, r) exceeds the budget of `mode`."""
    if mode == "exhaustive":
        universe = math.comb(n, r)
        if universe > config.exhaustive_edge_cap:
            raise InfeasibleInstanceError(
                f"exhaustive enumeration needs binom(n, r) <= {config.exhaustive_edge_cap}, "
                f"got binom({n}, {r}) = {universe}"
            )
    elif mode == "iso":
        cap = min(config.iso_cap(r), config.isomorphism_max_n)
        if n > cap:
            raise InfeasibleInstanceError(
                f"iso-reduced enumeration supports n <= {cap} for r={r}, got n={n}"
            )
    else:
        raise InvalidHypergraphError(f"unknown enumeration mode {mode!r}")


def _exhaustive(
    n: int, r: int, predicate: Predicate, hereditary: bool
) -> Iterator[Hypergraph]:
    universe = list(combinations(range(n), r))
    chosen: list[Edge] = []

    def dfs(start: int) -> Iterator[Hypergraph]:
        graph = Hypergraph(n=n, r=r, edges=tuple(chosen))
        ok = predicate(graph)
        if ok:
            yield graph
        elif hereditary:
            return
        for i in range(start, len(universe)):
            chosen.append(universe[i])
            yield from dfs(i + 1)
            chosen.pop()

    yield from dfs(0)


def _iso_reduced(
    n: int, r: int, predicate: Predicate, hereditary: bool, max_n: int
) -> Iterator[Hypergraph]:
    universe = list(combinations(range(n), r))
    level: list[Hypergraph] = [Hypergraph(n=n, r=r, edges=())]
    size = 0
    while level:
        expand: list[Hypergraph] = []
        for graph in level:
            if predicate(graph):
                yield graph
                expand.append(graph)
            elif not hereditary:
                expand.append(graph)
        children: dict[CanonicalForm, Hypergraph] = {}
        for graph in expand:
            for edge in universe:
                if graph.has_edge(edge):
                    continue
                child = Hypergraph.from_sorted(n, r, (*graph.edges, edge))
                key = canonical_form(child, max_n)
                if key not in children:
                    children[key] = Hypergraph(n=n, r=r, edges=key[2])
        size += 1
        logger.debug(
            "iso enumeration n={} r={}: {} classes with {} edges", n, r, len(children), size
        )
        level = [children[key] for key in sorted(children)]


def enumerate_hypergraphs(
    n: int,
    r: int,
    predicate: Predicate | None = None,
    *,
    mode: EnumerationMode = "exhaustive",
    hereditary: bool = False,
    config: EnumerationConfig | None = None,
) -> Iterator[Hypergraph]:
    """Yield every r-graph on 0..n-1 passing `predicate`.

    mode="exhaustive" yields every labeled edge subset (DFS in lexicographic edge
    order); mode="iso" yields one canonical representative per isomorphism class,
    by number of edges and then canonical form. With `hereditary=True` the
    predicate is assumed closed under edge deletion and failing graphs are not
    extended, which is what makes F-free searches cheap.
    mode="auto" uses iso while n is under its cap and exhaustive otherwise.
    """
    if r < 2:
        raise InvalidHypergraphError(f"uniformity must be >= 2, got {r}")
    config = config or EnumerationConfig()
    mode = resolve_mode(n, r, mode, config)
    predicate = predicate or _accept_all
    if mode == "exhaustive":
        return _exhaustive(n, r, predicate, hereditary)
    return _iso_reduced(n, r, predicate, hereditary, config.isomorphism_max_n)


def edge_maximal_only(graphs: list[Hypergraph], predicate: Predicate) -> list[Hypergraph]:
    """Filter to graphs where no absent r-set can be added while keeping `predicate`."""
    return [g for g in graphs if is_edge_maximal(g, predicate)]
