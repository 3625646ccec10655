"""
Brute-force EX / SPEX over hereditary families given by a predicate.

Families are enumerated with hereditary pruning (supergraphs of a graph that
fails the predicate are never generated). P_G has nonnegative coefficients, so
lambda^(alpha) never drops when an edge is added and the optimum is always
attained by an edge-maximal member. For alpha >= r the increase is strict, so
only edge-maximal members are solved and the witnesses are audited for it;
below r every member is solved so that the full tie set is reported.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from loguru import logger

from hyperturan.config.schema import Config, SolverConfig
from hyperturan.errors import UniformityMismatchError
from hyperturan.extremal.types import ExtremalReport, Witness
from hyperturan.hypergraph.builders import complete
from hyperturan.hypergraph.containment import is_free
from hyperturan.hypergraph.core import Hypergraph, is_edge_maximal, remove_edge
from hyperturan.hypergraph.enumeration import (
    EnumerationMode,
    Predicate,
    enumerate_hypergraphs,
    resolve_mode,
)
from hyperturan.hypergraph.isomorphism import CanonicalForm, canonical_form
from hyperturan.spectral.solver import alpha_spectral_radius
from hyperturan.spectral.types import SpectralEstimate

TIE = 1e-9

T = TypeVar("T")
U = TypeVar("U")


def tie_slack(value: float) -> float:
    return TIE * max(1.0, abs(value))


def parallel_map(fn: Callable[[T], U], items: Sequence[T], threads: int) -> list[U]:
    """Order-preserving map, threaded when `threads` > 1."""
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def inner_solver(config: Config) -> SolverConfig:
    """Solver settings for per-graph solves: graph-level threads replace restart threads."""
    return config.solver.model_copy(update={"threads": 1})


def check_family(forbidden: Iterable[Hypergraph], r: int) -> list[Hypergraph]:
    family = list(forbidden)
    for f in family:
        if f.r != r:
            raise UniformityMismatchError(f"forbidden graph has r={f.r}, search has r={r}")
    return family


def dedupe(graphs: Iterable[Hypergraph], max_n: int) -> list[Hypergraph]:
    """One canonical representative per isomorphism class, in canonical order."""
    classes: dict[CanonicalForm, Hypergraph] = {}
    for g in graphs:
        key = canonical_form(g, max_n)
        classes.setdefault(key, Hypergraph(n=g.n, r=g.r, edges=key[2]))
    return [classes[key] for key in sorted(classes)]


def edge_extremal(
    predicate: Predicate,
    n: int,
    r: int,
    config: Config | None = None,
    *,
    mode: EnumerationMode = "auto",
) -> ExtremalReport:
    """Maximum edge count over the hereditary family `predicate`, with all witnesses."""
    config = config or Config()
    resolved = resolve_mode(n, r, mode, config.enumeration)
    max_n = config.enumeration.isomorphism_max_n
    best = -1
    witnesses: dict[CanonicalForm, Hypergraph] = {}
    scanned = 0
    for g in enumerate_hypergraphs(
        n, r, predicate, mode=resolved, hereditary=True, config=config.enumeration
    ):
        scanned += 1
        if g.e < best:
            continue
        if g.e > best:
            best, witnesses = g.e, {}
        key = canonical_form(g, max_n)
        witnesses.setdefault(key, Hypergraph(n=n, r=r, edges=key[2]))
    graphs = [witnesses[key] for key in sorted(witnesses)]
    logger.info("EX n={} r={}: {} edges, {} witnesses, {} graphs", n, r, best, len(graphs), scanned)
    return ExtremalReport(
        kind="EX",
        n=n,
        r=r,
        optimum=float(best),
        witnesses=tuple(Witness(g, float(g.e)) for g in graphs),
        mode=resolved,
        audit={"witnesses_in_family": all(predicate(g) for g in graphs)},
        graphs_scanned=scanned,
    )


def _strictly_monotone(w: Hypergraph, value: float, alpha: float, solver: SolverConfig) -> bool:
    """lambda drops strictly when any single edge is removed."""
    for edge in w.edges:
        smaller = alpha_spectral_radius(remove_edge(w, edge), alpha, solver).value
        if smaller >= value - tie_slack(value):
            return False
    return True


def spectral_search(
    predicate: Predicate,
    n: int,
    r: int,
    alpha: float,
    config: Config | None = None,
    *,
    mode: EnumerationMode = "auto",
) -> ExtremalReport:
    """Maximum lambda^(alpha) over the hereditary family `predicate`, with every tying witness."""
    config = config or Config()
    resolved = resolve_mode(n, r, mode, config.enumeration)
    max_n = config.enumeration.isomorphism_max_n
    maximal_only = alpha >= r
    classes: dict[CanonicalForm, Hypergraph] = {}
    scanned = 0
    max_e = 0
    for g in enumerate_hypergraphs(
        n, r, predicate, mode=resolved, hereditary=True, config=config.enumeration
    ):
        scanned += 1
        max_e = max(max_e, g.e)
        if maximal_only and not is_edge_maximal(g, predicate):
            continue
        key = canonical_form(g, max_n)
        classes.setdefault(key, Hypergraph(n=n, r=r, edges=key[2]))
    candidates = [classes[key] for key in sorted(classes)]
    solver = inner_solver(config)
    estimates: list[SpectralEstimate] = parallel_map(
        lambda g: alpha_spectral_radius(g, alpha, solver), candidates, config.solver.threads
    )
    return _spectral_report(
        n, r, alpha, candidates, estimates, predicate, resolved, scanned, max_e, solver
    )


def _spectral_report(
    n: int,
    r: int,
    alpha: float,
    candidates: Sequence[Hypergraph],
    estimates: Sequence[SpectralEstimate],
    predicate: Predicate,
    mode: str,
    scanned: int,
    max_e: int,
    solver: SolverConfig,
) -> ExtremalReport:
    best = max(est.value for est in estimates)
    slack = tie_slack(best)
    witnesses = tuple(
        Witness(g, est.value, tuple(est.vector.as_list()), None, est.converged)
        for g, est in zip(candidates, estimates)
        if est.value >= best - slack
    )
    unconverged = sum(not est.converged for est in estimates)
    lower = math.factorial(r) * max_e / n ** (r / alpha) if n else 0.0
    audit = {
        "converged": unconverged == 0,
        "witnesses_in_family": all(predicate(w.graph) for w in witnesses),
        "spectral_lower_bound": best >= lower - slack,
    }
    notes: list[str] = []
    if alpha > 1:
        audit["witnesses_edge_maximal"] = all(
            is_edge_maximal(w.graph, predicate) for w in witnesses
        )
        if alpha < r:
            notes.append("edge-maximality is flagged, not assumed, for 1 < alpha < r")
    if alpha >= r:
        audit["strictly_monotone"] = all(
            _strictly_monotone(w.graph, w.value, alpha, solver) for w in witnesses
        )
    if unconverged:
        notes.append(f"{unconverged} of {len(estimates)} solves did not converge")
        logger.warning("SPEX n={} alpha={}: {} unconverged solves", n, alpha, unconverged)
    logger.info(
        "SPEX n={} r={} alpha={}: {:.12g} with {} witnesses ({} solved of {} scanned)",
        n, r, alpha, best, len(witnesses), len(candidates), scanned,
    )
    return ExtremalReport(
        kind="SPEX",
        n=n,
        r=r,
        optimum=best,
        witnesses=witnesses,
        mode=mode,  # type: ignore[arg-type]
        alpha=alpha,
        audit=audit,
        graphs_scanned=scanned,
        notes=tuple(notes),
    )


def turan_number(
    forbidden: Iterable[Hypergraph],
    n: int,
    r: int,
    config: Config | None = None,
    *,
    mode: EnumerationMode = "auto",
) -> ExtremalReport:
    """ex(n, F) with all extremal F-free graphs up to isomorphism."""
    family = check_family(forbidden, r)
    if not family:
        top = complete(n, r)
        return ExtremalReport(
            "EX", n, r, float(top.e), (Witness(top, float(top.e)),), "exhaustive",
            audit={"witnesses_in_family": True}, notes=("empty family: K_n^r",),
        )
    return edge_extremal(lambda g: is_free(g, family), n, r, config, mode=mode)


def spectral_extremal(
    forbidden: Iterable[Hypergraph],
    n: int,
    r: int,
    alpha: float,
    config: Config | None = None,
    *,
    mode: EnumerationMode = "auto",
) -> ExtremalReport:
    """SPEX_alpha(F-free, n): the largest lambda^(alpha) among F-free r-graphs on n vertices."""
    config = config or Config()
    family = check_family(forbidden, r)
    if not family:
        top = complete(n, r)
        estimate = alpha_spectral_radius(top, alpha, inner_solver(config))
        return ExtremalReport(
            "SPEX", n, r, estimate.value,
            (Witness(top, estimate.value, tuple(estimate.vector.as_list()), None,
                     estimate.converged),),
            "exhaustive", alpha=alpha, audit={"converged": estimate.converged},
            notes=("empty family: K_n^r",),
        )
    return spectral_search(lambda g: is_free(g, family), n, r, alpha, config, mode=mode)
