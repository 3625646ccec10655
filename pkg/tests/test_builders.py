"""Tests for the extremal constructions and the builtin registry."""

import math

import pytest

from hyperturan.errors import InvalidHypergraphError, ParseError
from hyperturan.hypergraph.builders import (
    balanced_partition,
    chromatic_turan,
    complete,
    complete_bipartite,
    complete_partite,
    cycle,
    f_rl,
    resolve_builtin,
    single_edge,
    turan_hypergraph,
)
from hyperturan.hypergraph.core import degrees
from hyperturan.hypergraph.isomorphism import is_isomorphic


def test_complete_edge_count():
    assert complete(6, 3).e == math.comb(6, 3)
    assert single_edge(4).edges == ((0, 1, 2, 3),)


def test_balanced_partition_puts_remainder_first():
    assert balanced_partition(7, 3).sizes == (3, 2, 2)


def test_turan_graph_r2():
    h = turan_hypergraph(6, 3, 2)
    assert h.e == 12
    assert turan_hypergraph(7, 2, 2).e == 12


def test_turan_graph_3_uniform():
    # T_3^3(6): one vertex from each of three pairs
    assert turan_hypergraph(6, 3, 3).e == 8


def test_turan_requires_l_at_least_r():
    with pytest.raises(InvalidHypergraphError):
        turan_hypergraph(6, 2, 3)


def test_chromatic_turan_counts_non_monochromatic_sets():
    # Q_2^3(6): binom(6,3) minus the two monochromatic triples
    assert chromatic_turan(6, 2, 3).e == 20 - 2


def test_chromatic_turan_r2_is_turan_graph():
    assert is_isomorphic(chromatic_turan(7, 3, 2), turan_hypergraph(7, 3, 2))


def test_complete_partite_with_empty_block():
    h = complete_partite([2, 0, 1], 2)
    assert h.n == 3
    assert h.e == 2


def test_complete_bipartite():
    h = complete_bipartite(2, 3)
    assert h.e == 6
    assert degrees(h).degrees == (3, 3, 2, 2, 2)


def test_f_rl_structure():
    h = f_rl(3, 4)
    # the edge {0,1,2} plus one edge per pair {i,3}, each with one fresh vertex
    assert h.r == 3
    assert h.e == 4
    assert h.n == 4 + 3
    assert h.has_edge((0, 1, 2))


def test_f_rl_needs_l_above_r():
    with pytest.raises(InvalidHypergraphError):
        f_rl(3, 3)


@pytest.mark.parametrize(
    "text,n,r,e",
    [
        ("K_3", 3, 2, 3),
        ("C_5", 5, 2, 5),
        ("P_4", 4, 2, 3),
        ("K_2,3", 5, 2, 6),
        ("edge:r=3", 3, 3, 1),
        ("complete:n=5,r=3", 5, 3, 10),
        ("turan:n=6,l=3,r=2", 6, 2, 12),
        ("chromatic:n=6,k=2,r=3", 6, 3, 18),
        ("partite:sizes=1-2-2,r=3", 5, 3, 4),
        ("expansion:F=K_3,r=3", 6, 3, 3),
        ("expansion:F=K_2,3,r=3", 11, 3, 6),
    ],
)
def test_resolve_builtin(text, n, r, e):
    h = resolve_builtin(text)
    assert (h.n, h.r, h.e) == (n, r, e)


def test_resolve_builtin_unknown_name():
    with pytest.raises(ParseError, match="unknown builtin"):
        resolve_builtin("petersen")


def test_resolve_builtin_bad_parameters():
    with pytest.raises(ParseError):
        resolve_builtin("turan:n=6,r=2")
    with pytest.raises(ParseError):
        resolve_builtin("complete:n=x,r=2")


def test_cycle_needs_three_vertices():
    with pytest.raises(InvalidHypergraphError):
        cycle(2)
