"""Tests for EX / SPEX searches over F-free and colourable families."""

import math

import pytest

from hyperturan.config.schema import Config
from hyperturan.errors import InvalidPatternError, UniformityMismatchError
from hyperturan.extremal import (
    ex_col,
    ex_col_union,
    spectral_extremal,
    spex_col,
    spex_col_union,
    turan_number,
)
from hyperturan.extremal.search import parallel_map, tie_slack
from hyperturan.hypergraph.builders import complete, turan_hypergraph
from hyperturan.hypergraph.isomorphism import is_isomorphic
from hyperturan.patterns import chromatic_pattern, complete_pattern


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_triangle_turan_numbers(n):
    report = turan_number([complete(3, 2)], n, 2)
    assert report.optimum == n * n // 4
    assert len(report.witnesses) == 1
    assert is_isomorphic(report.witnesses[0].graph, turan_hypergraph(n, 2, 2))
    assert report.passed


def test_turan_number_exhaustive_mode_agrees():
    iso = turan_number([complete(3, 2)], 5, 2, mode="iso")
    labeled = turan_number([complete(3, 2)], 5, 2, mode="exhaustive")
    assert iso.optimum == labeled.optimum == 6
    assert len(labeled.witnesses) == 1
    assert labeled.graphs_scanned > iso.graphs_scanned


def test_turan_number_of_empty_family():
    report = turan_number([], 5, 3)
    assert report.optimum == 10
    assert report.witnesses[0].graph == complete(5, 3)


def test_turan_number_in_3_graphs():
    # each of the five 4-sets must miss a triple, and one triple covers two of them
    report = turan_number([complete(4, 3)], 5, 3)
    assert report.optimum == 7


def test_mixed_uniformity_is_rejected():
    with pytest.raises(UniformityMismatchError):
        turan_number([complete(3, 2)], 5, 3)


@pytest.mark.parametrize("n,alpha", [(5, 2.0), (6, 2.0), (5, 3.0)])
def test_spectral_turan_for_triangles(n, alpha):
    report = spectral_extremal([complete(3, 2)], n, 2, alpha)
    target = turan_hypergraph(n, 2, 2)
    a, b = n // 2, n - n // 2
    assert report.optimum == pytest.approx(2 * a * b / (4 * a * b) ** (1 / alpha), abs=1e-8)
    assert len(report.witnesses) == 1
    assert is_isomorphic(report.witnesses[0].graph, target)
    assert report.audit["strictly_monotone"]
    assert report.passed


def test_spectral_extremal_at_alpha_one_reports_all_ties():
    # every nonempty triangle-free graph has Lagrangian 1/2
    report = spectral_extremal([complete(3, 2)], 4, 2, 1.0)
    assert report.optimum == pytest.approx(0.5, abs=1e-9)
    assert report.witnesses
    assert all(w.value == pytest.approx(0.5, abs=1e-6) for w in report.witnesses)
    assert "strictly_monotone" not in report.audit


def test_spectral_extremal_of_empty_family():
    report = spectral_extremal([], 4, 2, 2.0)
    assert report.optimum == pytest.approx(3.0, abs=1e-9)


def test_spex_col_finds_balanced_bipartite_graph():
    report = spex_col(complete_pattern(2, 2), 6, 2.0)
    assert report.optimum == pytest.approx(3.0, abs=1e-8)
    assert [w.composition for w in report.witnesses] == [(3, 3)]
    assert report.audit["full_solve_agrees"]
    assert report.passed


def test_spex_col_odd_n_has_one_witness_class():
    report = spex_col(complete_pattern(2, 2), 5, 2.0)
    assert report.optimum == pytest.approx(math.sqrt(6), abs=1e-8)
    assert len(report.witnesses) == 1
    assert is_isomorphic(report.witnesses[0].graph, turan_hypergraph(5, 2, 2))


def test_spex_col_matches_brute_force_search():
    brute = spectral_extremal([complete(3, 2)], 6, 2, 2.0)
    assert spex_col(complete_pattern(2, 2), 6, 2.0).optimum == pytest.approx(
        brute.optimum, abs=1e-8
    )


def test_spex_col_below_uniformity():
    report = spex_col(chromatic_pattern(2, 3), 2, 3.0)
    assert report.optimum == 0.0
    assert report.witnesses[0].graph.e == 0


def test_spex_col_chromatic_pattern_is_balanced():
    report = spex_col(chromatic_pattern(2, 3), 6, 3.0)
    assert [w.composition for w in report.witnesses] == [(3, 3)]


def test_ex_col_values():
    assert ex_col(complete_pattern(2, 2), 7).optimum == 12
    report = ex_col(chromatic_pattern(2, 3), 6)
    assert report.optimum == 18
    assert report.witnesses[0].composition == (3, 3)
    assert report.passed


def test_ex_col_union_takes_best_pattern():
    report = ex_col_union([complete_pattern(2, 2), complete_pattern(3, 2)], 6)
    assert report.optimum == 12
    assert len(report.witnesses) == 1
    assert is_isomorphic(report.witnesses[0].graph, turan_hypergraph(6, 3, 2))


def test_spex_col_union_requires_common_uniformity():
    with pytest.raises(InvalidPatternError):
        spex_col_union([complete_pattern(2, 2), chromatic_pattern(2, 3)], 5, 2.0)
    with pytest.raises(InvalidPatternError):
        ex_col_union([], 5)


def test_threaded_search_is_deterministic():
    config = Config()
    config.solver.threads = 3
    threaded = spex_col(complete_pattern(3, 2), 7, 2.0, config)
    serial = spex_col(complete_pattern(3, 2), 7, 2.0)
    assert threaded.optimum == pytest.approx(serial.optimum, abs=1e-10)
    assert [w.composition for w in threaded.witnesses] == [w.composition for w in serial.witnesses]


def test_parallel_map_preserves_order():
    assert parallel_map(lambda x: x * x, [3, 1, 2], 4) == [9, 1, 4]


def test_tie_slack_scales_with_value():
    assert tie_slack(0.5) == pytest.approx(1e-9)
    assert tie_slack(1000.0) == pytest.approx(1e-6)
