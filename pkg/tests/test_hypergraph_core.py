"""Tests for the hypergraph data model and structural operations."""

import pytest

from hyperturan.errors import (
    DuplicateEdgeError,
    EdgeSizeError,
    InvalidHypergraphError,
    InvalidMultiplicityError,
    VertexRangeError,
)
from hyperturan.hypergraph.builders import complete, cycle, path, single_edge
from hyperturan.hypergraph.core import (
    VertexPartition,
    blow_up,
    blow_up_class_map,
    clone_move,
    degrees,
    delete_vertex,
    expansion,
    induced_subgraph,
    is_edge_maximal,
    new_hypergraph,
    remove_edge,
)


def test_new_hypergraph_sorts_edges():
    h = new_hypergraph(4, 3, [(3, 1, 0), (2, 1, 0)])
    assert h.edges == ((0, 1, 2), (0, 1, 3))
    assert h.e == 2
    assert h.has_edge((1, 3, 0))
    assert not h.has_edge((1, 2, 3))


def test_new_hypergraph_rejects_wrong_size():
    with pytest.raises(EdgeSizeError):
        new_hypergraph(4, 3, [(0, 1)])


def test_new_hypergraph_rejects_repeated_vertex():
    with pytest.raises(EdgeSizeError):
        new_hypergraph(4, 3, [(0, 1, 1)])


def test_new_hypergraph_rejects_out_of_range():
    with pytest.raises(VertexRangeError):
        new_hypergraph(3, 2, [(0, 3)])


def test_new_hypergraph_rejects_duplicates():
    with pytest.raises(DuplicateEdgeError):
        new_hypergraph(3, 2, [(0, 1), (1, 0)])


def test_uniformity_below_two_is_invalid():
    with pytest.raises(InvalidHypergraphError):
        new_hypergraph(3, 1, [])


def test_edge_array_shape_when_empty():
    h = new_hypergraph(5, 3, [])
    assert h.edge_array.shape == (0, 3)


def test_degrees_and_links():
    h = cycle(5)
    profile = degrees(h)
    assert profile.degrees == (2, 2, 2, 2, 2)
    assert profile.min_degree == 2
    assert profile.total == 2 * h.e
    assert h.links[0] == frozenset({(1,), (4,)})
    assert h.neighbors[0] == frozenset({1, 4})


def test_induced_subgraph_relabels():
    h = complete(5, 3)
    sub = induced_subgraph(h, [4, 0, 2])
    assert sub.n == 3
    assert sub.edges == ((0, 1, 2),)


def test_delete_vertex():
    h = delete_vertex(cycle(4), 0)
    assert h.n == 3
    assert h.edges == ((0, 1), (1, 2))


def test_delete_vertex_out_of_range():
    with pytest.raises(VertexRangeError):
        delete_vertex(cycle(4), 4)


def test_blow_up_of_edge_is_complete_bipartite():
    h = blow_up(single_edge(2), [2, 3])
    assert h.n == 5
    assert h.e == 6
    assert blow_up_class_map([2, 3]) == (0, 0, 1, 1, 1)


def test_blow_up_of_triple():
    h = blow_up(single_edge(3), [2, 2, 2])
    assert h.e == 8


def test_blow_up_rejects_bad_multiplicities():
    with pytest.raises(InvalidMultiplicityError):
        blow_up(single_edge(2), [1, 0])
    with pytest.raises(InvalidMultiplicityError):
        blow_up(single_edge(2), [1])


def test_expansion_adds_fresh_vertices():
    h = expansion(complete(3, 2), 4)
    assert h.r == 4
    assert h.n == 3 + 3 * 2
    assert h.e == 3
    assert degrees(h).degrees[:3] == (2, 2, 2)


def test_expansion_at_r2_is_identity():
    triangle = complete(3, 2)
    assert expansion(triangle, 2) == triangle


def test_clone_move_copies_link():
    # path 0-1-2: make 0 a clone of 2 (both then adjacent to 1)
    h = clone_move(path(3), 0, 2)
    assert h.edges == ((0, 1), (1, 2))
    h2 = clone_move(path(4), 0, 2)
    assert set(h2.edges) == {(1, 2), (2, 3), (0, 1), (0, 3)}


def test_is_edge_maximal_for_triangle_free():
    from hyperturan.hypergraph.containment import is_free

    def triangle_free(g):
        return is_free(g, [complete(3, 2)])

    assert is_edge_maximal(cycle(5), triangle_free)
    assert not is_edge_maximal(path(4), triangle_free)


def test_vertex_partition_balance():
    assert VertexPartition.consecutive([2, 2, 1]).is_balanced()
    assert not VertexPartition.consecutive([3, 1]).is_balanced()
    assert VertexPartition.consecutive([1, 2]).block_of() == (0, 1, 1)


def test_remove_edge():
    h = remove_edge(complete(4, 3), (2, 0, 1))
    assert h.e == 3
    assert not h.has_edge((0, 1, 2))
    with pytest.raises(InvalidHypergraphError):
        remove_edge(h, (0, 1, 2))
