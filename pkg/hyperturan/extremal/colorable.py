"""
EX / SPEX inside Col(P) through maximal colourable graphs.

Every P-colourable graph is a subgraph of maximal_colorable(sizes, P) for the
class sizes of its colouring, so both optima are maxima over the weak
compositions of n into l parts. Edge counts are closed-form; lambda uses the
class-constant reduced problem, exact for alpha = 1 and alpha >= r.
"""

from __future__ import annotations

import math
from collections.abc import Hashable, Sequence
from dataclasses import dataclass

from loguru import logger

from hyperturan.config.schema import Config
from hyperturan.errors import InvalidPatternError
from hyperturan.extremal.search import inner_solver, parallel_map, tie_slack
from hyperturan.extremal.types import ExtremalReport, Witness
from hyperturan.hypergraph.core import Hypergraph, empty_hypergraph
from hyperturan.hypergraph.isomorphism import canonical_form
from hyperturan.patterns.construction import composition_edge_counts, maximal_colorable
from hyperturan.patterns.pattern import Pattern
from hyperturan.spectral.solver import alpha_spectral_radius
from hyperturan.spectral.symmetric import symmetric_spectral_radius
from hyperturan.spectral.types import SpectralEstimate
from hyperturan.utils.helpers import weak_compositions


@dataclass(frozen=True)
class CompositionValue:
    """lambda of maximal_colorable(composition, P)."""

    composition: tuple[int, ...]
    value: float
    estimate: SpectralEstimate
    full_value: float | None = None  # unreduced solve, when the cross-check ran


def composition_scan(
    p: Pattern, n: int, alpha: float, config: Config | None = None
) -> list[CompositionValue]:
    """Reduced solve of every weak composition of n, in descending lexicographic order."""
    config = config or Config()
    solver = inner_solver(config)
    compositions = list(weak_compositions(n, p.l))
    estimates = parallel_map(
        lambda c: symmetric_spectral_radius(c, p, alpha, solver, r=p.r),
        compositions,
        config.solver.threads,
    )
    return [CompositionValue(c, est.value, est) for c, est in zip(compositions, estimates)]


def _cross_check(
    p: Pattern, scan: list[CompositionValue], alpha: float, config: Config
) -> tuple[list[CompositionValue], bool]:
    """Re-solve every maximal colourable graph without the reduction."""
    solver = inner_solver(config)
    graphs = [maximal_colorable(item.composition, p)[0] for item in scan]
    full = parallel_map(
        lambda g: alpha_spectral_radius(g, alpha, solver), graphs, config.solver.threads
    )
    checked: list[CompositionValue] = []
    agree = True
    for item, est in zip(scan, full):
        slack = max(tie_slack(est.value), 10 * config.solver.tolerance)
        if item.value > est.value + slack:
            agree = False
        # below r the class-constant value is only a lower bound
        if alpha < p.r and alpha != 1:
            best = max(item.value, est.value)
        else:
            agree = agree and abs(item.value - est.value) <= 1e-6 * max(1.0, est.value)
            best = item.value
        checked.append(CompositionValue(item.composition, best, item.estimate, est.value))
    return checked, agree


def _witness_graphs(
    p: Pattern, compositions: Sequence[tuple[int, ...]], config: Config
) -> list[tuple[Hashable, Hypergraph, tuple[int, ...]]]:
    """(class key, maximal graph, composition) per winner, one per isomorphism class.

    Graphs keep the block layout so solve vectors stay aligned. Above the
    isomorphism cap the key is the edge set, so only identical graphs merge.
    """
    max_n = config.enumeration.isomorphism_max_n
    classes: dict[Hashable, tuple[Hypergraph, tuple[int, ...]]] = {}
    for comp in compositions:
        graph = maximal_colorable(comp, p)[0]
        key = canonical_form(graph, max_n) if graph.n <= max_n else (graph.n, graph.edges)
        classes.setdefault(key, (graph, comp))
    return [(key, graph, comp) for key, (graph, comp) in sorted(classes.items())]


def spex_col(
    p: Pattern, n: int, alpha: float, config: Config | None = None
) -> ExtremalReport:
    """SPEX_alpha(Col(P), n) over all compositions, with the lifted witnesses."""
    return spex_col_union([p], n, alpha, config)


def spex_col_union(
    patterns: Sequence[Pattern], n: int, alpha: float, config: Config | None = None
) -> ExtremalReport:
    """SPEX over Col(P_1) u ... u Col(P_t): the best composition of any pattern."""
    config = config or Config()
    r = _common_uniformity(patterns)
    if n < r:
        empty = empty_hypergraph(n, r)
        return ExtremalReport(
            "SPEX", n, r, 0.0, (Witness(empty, 0.0),), "colorable-candidates", alpha=alpha,
            audit={"converged": True}, notes=("n < r: no edges possible",),
        )
    cap = config.enumeration.brute_force_edge_cap
    run_cross_check = math.comb(n, r) <= cap
    scans: list[tuple[Pattern, list[CompositionValue]]] = []
    agree = True
    for p in patterns:
        scan = composition_scan(p, n, alpha, config)
        if run_cross_check:
            scan, ok = _cross_check(p, scan, alpha, config)
            agree = agree and ok
        scans.append((p, scan))

    best = max(item.value for _, scan in scans for item in scan)
    slack = tie_slack(best)
    witnesses: list[Witness] = []
    seen: set[Hashable] = set()
    for p, scan in scans:
        winners = [item for item in scan if item.value >= best - slack]
        estimates = {item.composition: item for item in winners}
        for key, graph, comp in _witness_graphs(p, [w.composition for w in winners], config):
            if key in seen:
                continue
            seen.add(key)
            item = estimates[comp]
            witnesses.append(
                Witness(
                    graph, item.value, tuple(item.estimate.vector.as_list()), comp,
                    item.estimate.converged,
                )
            )

    audit = {"converged": all(item.estimate.converged for _, s in scans for item in s)}
    notes = []
    if run_cross_check:
        audit["full_solve_agrees"] = agree
    if 1 < alpha < r:
        notes.append("class-constant solves are lower bounds for 1 < alpha < r")
    logger.info(
        "spex_col n={} alpha={}: {:.12g}, winning compositions {}",
        n, alpha, best, [w.composition for w in witnesses],
    )
    return ExtremalReport(
        kind="SPEX",
        n=n,
        r=r,
        optimum=best,
        witnesses=tuple(witnesses),
        mode="colorable-candidates",
        alpha=alpha,
        audit=audit,
        graphs_scanned=sum(len(s) for _, s in scans),
        notes=tuple(notes),
    )


def ex_col(p: Pattern, n: int, config: Config | None = None) -> ExtremalReport:
    """ex(Col(P), n) as the best closed-form composition count."""
    return ex_col_union([p], n, config)


def ex_col_union(
    patterns: Sequence[Pattern], n: int, config: Config | None = None
) -> ExtremalReport:
    config = config or Config()
    r = _common_uniformity(patterns)
    counts = [(p, *composition_edge_counts(p, n)) for p in patterns]
    best = int(max(int(c.max()) for _, _, c in counts))
    witnesses: list[Witness] = []
    seen: set[Hashable] = set()
    for p, comps, c in counts:
        winners = [tuple(int(k) for k in comp) for comp, v in zip(comps, c) if int(v) == best]
        for key, graph, comp in _witness_graphs(p, winners, config):
            if key in seen:
                continue
            seen.add(key)
            witnesses.append(Witness(graph, float(best), (), comp))
    return ExtremalReport(
        kind="EX",
        n=n,
        r=r,
        optimum=float(best),
        witnesses=tuple(witnesses),
        mode="colorable-candidates",
        audit={"edge_counts_match": all(w.graph.e == best for w in witnesses)},
        graphs_scanned=sum(len(c) for _, _, c in counts),
    )


def _common_uniformity(patterns: Sequence[Pattern]) -> int:
    if not patterns:
        raise InvalidPatternError("at least one pattern is required")
    uniformities = {p.r for p in patterns}
    if len(uniformities) != 1:
        raise InvalidPatternError(f"patterns mix uniformities {sorted(uniformities)}")
    return uniformities.pop()
