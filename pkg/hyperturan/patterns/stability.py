"""Finite-n probe for degree stability of an F-free family with respect to Col(P)."""

from __future__ import annotations

import math
from collections.abc import Sequence

from loguru import logger

from hyperturan.config.schema import Config
from hyperturan.errors import InvalidPatternError, UniformityMismatchError
from hyperturan.hypergraph.containment import is_free
from hyperturan.hypergraph.core import Hypergraph, degrees
from hyperturan.hypergraph.enumeration import EnumerationMode, enumerate_hypergraphs
from hyperturan.patterns.density import simplex_density
from hyperturan.patterns.homomorphism import find_homomorphism
from hyperturan.patterns.pattern import Pattern


def degree_threshold(density: float, r: int, n: int, epsilon: float) -> float:
    """(pi / (r-1)! - epsilon) * n^(r-1)."""
    return (density / math.factorial(r - 1) - epsilon) * n ** (r - 1)


def degree_stability_probe(
    forbidden: Sequence[Hypergraph],
    p: Pattern,
    n: int,
    epsilon: float,
    config: Config | None = None,
    *,
    density: float | None = None,
    mode: EnumerationMode = "iso",
) -> list[Hypergraph]:
    """F-free graphs on n vertices with min degree >= the threshold and no P-colouring.

    The threshold is meant to use pi(Mon(F)); pass it as `density`. Without it the
    simplex density pi(Col(P)) stands in, which is allowed only when no member of F is
    P-colourable: then Col(P) lies inside Mon(F), the stand-in threshold is no larger, and
    the scan covers every graph the true threshold admits (extra graphs may be reported,
    none are missed). An empty result is evidence of degree stability at this n, not a proof.
    """
    config = config or Config()
    family = list(forbidden)
    for f in family:
        if f.r != p.r:
            raise UniformityMismatchError(f"forbidden graph has r={f.r}, pattern has r={p.r}")
    if p.has_monochromatic_edge:
        return []
    budget = config.enumeration.homomorphism_node_budget
    if density is None:
        colourable = [f for f in family if find_homomorphism(f, p, budget) is not None]
        if colourable:
            raise InvalidPatternError(
                f"{len(colourable)} forbidden graph(s) are {p.name or 'P'}-colourable, so "
                "pi(Col(P)) need not bound pi(Mon(F)); pass density explicitly"
            )
        density = simplex_density(p, config)[0]
    threshold = degree_threshold(density, p.r, n, epsilon)

    counterexamples: list[Hypergraph] = []
    scanned = 0
    for h in enumerate_hypergraphs(
        n,
        p.r,
        lambda g: is_free(g, family),
        mode=mode,
        hereditary=True,
        config=config.enumeration,
    ):
        scanned += 1
        if degrees(h).min_degree < threshold:
            continue
        if find_homomorphism(h, p, budget) is None:
            counterexamples.append(h)
    logger.info(
        "degree stability probe n={} eps={}: {} F-free graphs, {} counterexamples",
        n, epsilon, scanned, len(counterexamples),
    )
    return counterexamples
