"""
Constructors for the extremal families and small named graphs.

Every builder is deterministic: balanced partitions put the remainder vertices into
the lowest-indexed blocks, and the fresh vertices of F_{r,l} are allocated from
vertex l upwards in lexicographic pair order.

Builtins resolvable by name (CLI `--builtin`) live in BUILTINS below. Adding one:
  1. Write the builder function.
  2. Add a BuiltinSpec with its parameter names.
"""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations

from hyperturan.errors import InvalidHypergraphError, ParseError
from hyperturan.hypergraph.core import Hypergraph, VertexPartition, expansion, new_hypergraph
from hyperturan.utils.helpers import balanced_sizes, parse_params


def balanced_partition(n: int, parts: int) -> VertexPartition:
    """Balanced partition of 0..n-1 into `parts` consecutive blocks."""
    return VertexPartition.consecutive(balanced_sizes(n, parts))


def complete(n: int, r: int) -> Hypergraph:
    """K_n^r: every r-subset of 0..n-1."""
    if r < 2:
        raise InvalidHypergraphError(f"uniformity must be >= 2, got {r}")
    return Hypergraph(n=n, r=r, edges=tuple(combinations(range(n), r)))


def complete_partite(sizes: tuple[int, ...] | list[int], r: int) -> Hypergraph:
    """Complete partite r-graph: all r-sets meeting every block at most once."""
    if r < 2:
        raise InvalidHypergraphError(f"uniformity must be >= 2, got {r}")
    if any(s < 0 for s in sizes):
        raise InvalidHypergraphError(f"block sizes must be nonnegative: {list(sizes)}")
    owner = VertexPartition.consecutive(list(sizes)).block_of()
    n = len(owner)
    edges = (
        e for e in combinations(range(n), r) if len({owner[v] for v in e}) == r
    )
    return Hypergraph(n=n, r=r, edges=tuple(edges))


def turan_hypergraph(n: int, l: int, r: int) -> Hypergraph:
    """T_l^r(n): balanced complete l-partite r-graph."""
    if l < r:
        raise InvalidHypergraphError(f"Turan hypergraph needs l >= r, got l={l}, r={r}")
    return complete_partite(balanced_sizes(n, l), r)


def chromatic_turan(n: int, k: int, r: int) -> Hypergraph:
    """Q_k^r(n): all r-sets meeting every balanced block at most r-1 times."""
    if k < 2:
        raise InvalidHypergraphError(f"chromatic construction needs k >= 2, got {k}")
    if r < 2:
        raise InvalidHypergraphError(f"uniformity must be >= 2, got {r}")
    owner = balanced_partition(n, k).block_of()
    edges = (e for e in combinations(range(n), r) if len({owner[v] for v in e}) > 1)
    return Hypergraph(n=n, r=r, edges=tuple(edges))


def f_rl(r: int, l: int) -> Hypergraph:
    """F_{r,l}: the edge [r] plus {i, j} + E_ij for each remaining pair of [l]."""
    if r < 2:
        raise InvalidHypergraphError(f"uniformity must be >= 2, got {r}")
    if l <= r:
        raise InvalidHypergraphError(f"F_(r,l) needs l > r, got l={l}, r={r}")
    edges = [tuple(range(r))]
    fresh = l
    for i, j in combinations(range(l), 2):
        if j < r:
            continue
        extra = tuple(range(fresh, fresh + r - 2))
        fresh += r - 2
        edges.append(tuple(sorted((i, j, *extra))))
    return new_hypergraph(fresh, r, edges)


def single_edge(r: int) -> Hypergraph:
    """K_r^r."""
    return complete(r, r)


def cycle(n: int) -> Hypergraph:
    """C_n as a 2-graph (n >= 3)."""
    if n < 3:
        raise InvalidHypergraphError(f"cycle needs n >= 3, got {n}")
    return new_hypergraph(n, 2, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Hypergraph:
    """Path on n vertices (n - 1 edges)."""
    return new_hypergraph(n, 2, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Hypergraph:
    """K_{a,b}."""
    return complete_partite((a, b), 2)


# ---------------------------------------------------------------------------
# BUILTINS: named graphs for the CLI and the experiment registry.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BuiltinSpec:
    """A parameterised builder addressable as `name:key=value,...`."""

    name: str
    params: tuple[str, ...]
    build: Callable[..., Hypergraph]
    summary: str = ""

    def __call__(self, raw: dict[str, str]) -> Hypergraph:
        missing = [p for p in self.params if p not in raw]
        unknown = [k for k in raw if k not in self.params]
        if missing or unknown:
            raise ParseError(
                f"builtin '{self.name}' takes {', '.join(self.params) or 'no parameters'}"
                f" (missing: {missing}, unknown: {unknown})"
            )
        return self.build(**raw)


def _int(value: str, key: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"parameter {key} must be an integer, got {value!r}") from None


BUILTINS: tuple[BuiltinSpec, ...] = (
    BuiltinSpec(
        name="edge",
        params=("r",),
        build=lambda r: single_edge(_int(r, "r")),
        summary="single r-edge K_r^r",
    ),
    BuiltinSpec(
        name="complete",
        params=("n", "r"),
        build=lambda n, r: complete(_int(n, "n"), _int(r, "r")),
        summary="complete r-graph K_n^r",
    ),
    BuiltinSpec(
        name="turan",
        params=("n", "l", "r"),
        build=lambda n, l, r: turan_hypergraph(_int(n, "n"), _int(l, "l"), _int(r, "r")),
        summary="balanced complete l-partite r-graph T_l^r(n)",
    ),
    BuiltinSpec(
        name="chromatic",
        params=("n", "k", "r"),
        build=lambda n, k, r: chromatic_turan(_int(n, "n"), _int(k, "k"), _int(r, "r")),
        summary="balanced complete k-chromatic r-graph Q_k^r(n)",
    ),
    BuiltinSpec(
        name="partite",
        params=("sizes", "r"),
        build=lambda sizes, r: complete_partite(
            [_int(s, "sizes") for s in sizes.split("-")], _int(r, "r")
        ),
        summary="complete partite r-graph with block sizes a-b-c",
    ),
    BuiltinSpec(
        name="frl",
        params=("r", "l"),
        build=lambda r, l: f_rl(_int(r, "r"), _int(l, "l")),
        summary="F_(r,l): an edge [r] joined to the remaining pairs of [l]",
    ),
    BuiltinSpec(
        name="expansion",
        params=("F", "r"),
        build=lambda F, r: expansion(resolve_builtin(F), _int(r, "r")),  # noqa: N803
        summary="r-expansion of a named 2-graph",
    ),
)

_SHORT_NAMES = (
    (re.compile(r"^K_(\d+),(\d+)$"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^K_(\d+)$"), lambda m: complete(int(m[1]), 2)),
    (re.compile(r"^C_(\d+)$"), lambda m: cycle(int(m[1]))),
    (re.compile(r"^P_(\d+)$"), lambda m: path(int(m[1]))),
)


def find_by_name(name: str) -> BuiltinSpec | None:
    """Find a parameterised builtin by its name."""
    for spec in BUILTINS:
        if spec.name == name:
            return spec
    return None


def resolve_builtin(text: str) -> Hypergraph:
    """Build a graph from `K_3`, `C_5`, `P_4`, `K_2,3` or `name:key=value,...`."""
    text = text.strip()
    for pattern, build in _SHORT_NAMES:
        match = pattern.match(text)
        if match:
            return build(match)
    name, _, params = text.partition(":")
    spec = find_by_name(name)
    if spec is None:
        known = ", ".join(["K_n", "C_n", "P_n", "K_a,b", *(s.name for s in BUILTINS)])
        raise ParseError(f"unknown builtin {name!r} (known: {known})")
    if spec.name == "expansion" and "F=" in params:
        # the inner graph may itself contain commas (K_2,3)
        inner, sep, tail = params.partition("F=")[2].rpartition(",r=")
        if not sep:
            raise ParseError("expansion expects F=<graph>,r=<int>")
        return spec({"F": inner, "r": tail})
    return spec(parse_params(params))

