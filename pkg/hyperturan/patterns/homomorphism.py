"""Pattern colourings (homomorphisms H -> P) and the hereditary/multiplicative check."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from hyperturan.errors import (
    InfeasibleInstanceError,
    InvalidColoringError,
    UniformityMismatchError,
)
from hyperturan.hypergraph.core import Hypergraph, blow_up, blow_up_class_map, induced_subgraph
from hyperturan.patterns.pattern import Pattern, multiplicity_of

DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True, slots=True)
class Coloring:
    """Vertex -> colour map (colours 0..l-1)."""

    colors: tuple[int, ...]
    l: int  # noqa: E741

    def class_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.l
        for c in self.colors:
            sizes[c] += 1
        return tuple(sizes)

    def color_class(self, j: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == j)

    def restrict(self, subset: Iterable[int]) -> Coloring:
        """Colouring of induced_subgraph(H, subset) (relabeled in increasing order)."""
        return Coloring(tuple(self.colors[v] for v in sorted(set(subset))), self.l)

    def lift(self, t: Sequence[int]) -> Coloring:
        """Colouring of blow_up(H, t): every clone inherits its original's colour."""
        return Coloring(tuple(self.colors[i] for i in blow_up_class_map(t)), self.l)


def _check_inputs(h: Hypergraph, p: Pattern, phi: Coloring | Sequence[int]) -> tuple[int, ...]:
    if h.r != p.r:
        raise UniformityMismatchError(f"graph has r={h.r}, pattern has r={p.r}")
    colors = tuple(phi.colors if isinstance(phi, Coloring) else phi)
    if len(colors) != h.n:
        raise InvalidColoringError(f"colouring covers {len(colors)} of {h.n} vertices")
    bad = [c for c in colors if not 0 <= c < p.l]
    if bad:
        raise InvalidColoringError(f"colours {sorted(set(bad))} outside 0..{p.l - 1}")
    return colors


def is_valid_coloring(h: Hypergraph, p: Pattern, phi: Coloring | Sequence[int]) -> bool:
    """True iff every edge's colour multiset is allowed by P."""
    colors = _check_inputs(h, p, phi)
    return all(p.allows(multiplicity_of((colors[v] for v in e), p.l)) for e in h.edges)


def find_homomorphism(
    h: Hypergraph, p: Pattern, node_budget: int = DEFAULT_NODE_BUDGET
) -> Coloring | None:
    """First valid colouring in the fixed search order, or None after exhaustive search.

    Vertices are coloured by decreasing degree (ties by index), colours tried in
    increasing order. Partially coloured edges must stay below some allowed
    multiplicity vector. Exceeding `node_budget` raises InfeasibleInstanceError.
    """
    if h.r != p.r:
        raise UniformityMismatchError(f"graph has r={h.r}, pattern has r={p.r}")
    if h.e and not p.edges:
        return None
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    colors = [-1] * h.n
    partial = p.partial_set
    nodes = 0

    def consistent(v: int) -> bool:
        for idx in h.incidence[v]:
            counts = [0] * p.l
            complete = True
            for u in h.edges[idx]:
                if colors[u] < 0:
                    complete = False
                else:
                    counts[colors[u]] += 1
            vector = tuple(counts)
            if complete and not p.allows(vector):
                return False
            if not complete and vector not in partial:
                return False
        return True

    def extend(depth: int) -> bool:
        nonlocal nodes
        if depth == h.n:
            return True
        v = order[depth]
        for c in range(p.l):
            nodes += 1
            if nodes > node_budget:
                raise InfeasibleInstanceError(
                    f"homomorphism search exceeded {node_budget} nodes (n={h.n}, l={p.l})"
                )
            colors[v] = c
            if consistent(v) and extend(depth + 1):
                return True
        colors[v] = -1
        return False

    return Coloring(tuple(colors), p.l) if extend(0) else None


def is_colorable(h: Hypergraph, p: Pattern, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return find_homomorphism(h, p, node_budget) is not None


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of a hereditary + blow-up closure check for one (H, P, phi)."""

    passed: bool
    precondition_ok: bool
    checks: dict[str, bool] = field(default_factory=dict)
    witness: str | None = None

    def as_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "precondition_ok": self.precondition_ok,
            "checks": dict(self.checks),
            "witness": self.witness,
        }


def closure_check(
    h: Hypergraph,
    p: Pattern,
    phi: Coloring | Sequence[int],
    t: Sequence[int],
    subset: Iterable[int] | None = None,
) -> ClosureReport:
    """Check that phi restricted to H[S] and phi lifted to H(t) stay valid."""
    colors = _check_inputs(h, p, phi)
    coloring = Coloring(colors, p.l)
    if not is_valid_coloring(h, p, coloring):
        witness = "precondition violated: phi is not a valid colouring"
        return ClosureReport(False, False, {}, witness)
    chosen = sorted(set(range(h.n) if subset is None else subset))
    sub_ok = is_valid_coloring(induced_subgraph(h, chosen), p, coloring.restrict(chosen))
    blow_ok = is_valid_coloring(blow_up(h, t), p, coloring.lift(t))
    witness = None
    if not sub_ok:
        witness = f"induced subgraph on {chosen} lost validity"
    elif not blow_ok:
        witness = f"blow-up by {list(t)} lost validity"
    return ClosureReport(
        sub_ok and blow_ok, True, {"induced": sub_ok, "blow_up": blow_ok}, witness
    )
