"""Tests for subgraph containment, canonical forms and twin orbits."""

import itertools
import random

import pytest

from hyperturan.errors import InfeasibleInstanceError, UniformityMismatchError
from hyperturan.hypergraph.builders import (
    complete,
    complete_bipartite,
    cycle,
    path,
    single_edge,
    turan_hypergraph,
)
from hyperturan.hypergraph.containment import contains_subgraph, find_embedding, is_free
from hyperturan.hypergraph.core import new_hypergraph, relabel
from hyperturan.hypergraph.isomorphism import (
    canonical_form,
    canonical_graph,
    is_isomorphic,
    transposition_orbits,
)


def _brute_force_isomorphic(h1, h2):
    if (h1.n, h1.r, h1.e) != (h2.n, h2.r, h2.e):
        return False
    target = set(h2.edges)
    for perm in itertools.permutations(range(h1.n)):
        if {tuple(sorted(perm[v] for v in e)) for e in h1.edges} == target:
            return True
    return False


def test_triangle_in_complete_graph():
    embedding = find_embedding(complete(4, 2), complete(3, 2))
    assert embedding is not None
    assert len(set(embedding.values())) == 3


def test_bipartite_graph_is_triangle_free():
    assert is_free(turan_hypergraph(8, 2, 2), [complete(3, 2)])
    assert not is_free(turan_hypergraph(6, 3, 2), [complete(3, 2)])


def test_c5_contains_p4_not_c4():
    assert contains_subgraph(cycle(5), path(4))
    assert not contains_subgraph(cycle(5), cycle(4))


def test_containment_in_3_graphs():
    host = complete(5, 3)
    assert contains_subgraph(host, single_edge(3))
    assert not contains_subgraph(single_edge(3), complete(4, 3))


def test_containment_rejects_mixed_uniformity():
    with pytest.raises(UniformityMismatchError):
        find_embedding(complete(4, 3), complete(3, 2))


def test_relabeled_graph_is_isomorphic():
    h = new_hypergraph(6, 3, [(0, 1, 2), (0, 3, 4), (2, 4, 5), (1, 3, 5)])
    perm = [3, 5, 0, 1, 4, 2]
    assert is_isomorphic(h, relabel(h, perm))
    assert canonical_form(h) == canonical_form(relabel(h, perm))


@pytest.mark.parametrize(
    "h",
    [
        new_hypergraph(6, 3, [(0, 1, 2), (0, 3, 4), (2, 4, 5), (1, 3, 5)]),
        cycle(7),
        turan_hypergraph(7, 3, 2),
        new_hypergraph(7, 2, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (0, 6)]),
    ],
)
def test_canonical_form_ignores_vertex_order(h):
    rng = random.Random(23)
    form = canonical_form(h)
    perm = list(range(h.n))
    for _ in range(100):
        rng.shuffle(perm)
        assert canonical_form(relabel(h, perm)) == form


def test_isomorphism_matches_brute_force_on_random_graphs():
    rng = random.Random(7)
    pairs = list(itertools.combinations(range(6), 2))
    for _ in range(25):
        a = new_hypergraph(6, 2, rng.sample(pairs, 7))
        b = new_hypergraph(6, 2, rng.sample(pairs, 7))
        assert is_isomorphic(a, b) == _brute_force_isomorphic(a, b)


def test_path_and_star_are_not_isomorphic():
    star = new_hypergraph(4, 2, [(0, 1), (0, 2), (0, 3)])
    assert not is_isomorphic(path(4), star)


def test_canonical_graph_is_a_fixed_point():
    g = canonical_graph(complete_bipartite(2, 3))
    assert canonical_graph(g) == g


def test_canonical_form_refuses_large_orders():
    with pytest.raises(InfeasibleInstanceError):
        canonical_form(complete(13, 2))
    assert canonical_form(complete(13, 2), max_n=13)[0] == 13


def test_transposition_orbits_of_turan_graph():
    orbits = transposition_orbits(turan_hypergraph(5, 2, 2))
    assert orbits.blocks == ((0, 1, 2), (3, 4))


def test_transposition_orbits_of_cycle_are_singletons():
    assert transposition_orbits(cycle(5)).sizes == (1, 1, 1, 1, 1)
