"""Tests for exhaustive and isomorphism-reduced enumeration."""

import pytest

from hyperturan.config.schema import EnumerationConfig
from hyperturan.errors import InfeasibleInstanceError, InvalidHypergraphError
from hyperturan.hypergraph.builders import complete
from hyperturan.hypergraph.containment import is_free
from hyperturan.hypergraph.enumeration import (
    edge_maximal_only,
    enumerate_hypergraphs,
    resolve_mode,
)


def _triangle_free(h):
    return is_free(h, [complete(3, 2)])


def test_exhaustive_counts_every_labeled_graph():
    assert sum(1 for _ in enumerate_hypergraphs(4, 2, mode="exhaustive")) == 2**6


def test_iso_counts_isomorphism_classes():
    # 11 graphs on 4 vertices, 34 on 5; 5 classes of 3-graphs on 4 vertices
    assert sum(1 for _ in enumerate_hypergraphs(4, 2, mode="iso")) == 11
    assert sum(1 for _ in enumerate_hypergraphs(5, 2, mode="iso")) == 34
    assert sum(1 for _ in enumerate_hypergraphs(4, 3, mode="iso")) == 5


def test_hereditary_pruning_keeps_every_member():
    full = [g for g in enumerate_hypergraphs(5, 2, _triangle_free, mode="iso")]
    pruned = list(enumerate_hypergraphs(5, 2, _triangle_free, mode="iso", hereditary=True))
    assert len(full) == len(pruned)
    # 14 triangle-free graphs on 5 vertices up to isomorphism
    assert len(pruned) == 14


def test_iso_output_is_ordered_by_edge_count():
    sizes = [g.e for g in enumerate_hypergraphs(5, 2, mode="iso")]
    assert sizes == sorted(sizes)


def test_edge_maximal_triangle_free_graphs_on_five_vertices():
    graphs = list(enumerate_hypergraphs(5, 2, _triangle_free, mode="iso", hereditary=True))
    maximal = edge_maximal_only(graphs, _triangle_free)
    # C_5, K_{1,4} and K_{2,3}
    assert sorted(g.e for g in maximal) == [4, 5, 6]


def test_auto_mode_prefers_iso_under_the_cap():
    config = EnumerationConfig()
    assert resolve_mode(6, 2, "auto", config) == "iso"
    assert resolve_mode(3, 3, "auto", config) == "iso"


def test_auto_mode_falls_back_to_exhaustive():
    config = EnumerationConfig(iso_max_n={2: 4})
    assert resolve_mode(6, 2, "auto", config) == "exhaustive"


def test_exhaustive_cap():
    with pytest.raises(InfeasibleInstanceError):
        enumerate_hypergraphs(10, 2, mode="exhaustive")


def test_iso_cap():
    with pytest.raises(InfeasibleInstanceError):
        enumerate_hypergraphs(8, 3, mode="iso")


def test_unknown_mode():
    with pytest.raises(InvalidHypergraphError):
        enumerate_hypergraphs(4, 2, mode="random")
