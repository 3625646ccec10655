"""Tests for the finite-n inequality audits and the closed-form lemmas."""

import math

import numpy as np
import pytest

from hyperturan.errors import InvalidHypergraphError, NotColorableError, SolverError
from hyperturan.extremal import (
    balance_audit,
    expansion_spex_audit,
    fact1_check,
    growth_audit,
    inequality_audit,
    lemma_t5_threshold,
    mindeg_audit,
    orbit_constancy_audit,
    partite_uniqueness_audit,
    principal_ratio_trace,
    sequence_audit,
    spectral_gap_trace,
    spex_eq_ex_audit,
    xmin_log_bound,
)
from hyperturan.extremal.analytic import fact1_values, lemma_t5_gap
from hyperturan.hypergraph.builders import complete, cycle, turan_hypergraph
from hyperturan.patterns import complete_pattern


def test_inequality_chain_on_balanced_bipartite_graph():
    report = inequality_audit(turan_hypergraph(6, 2, 2), 2.0, complete_pattern(2, 2), density=0.5)
    assert report.passed
    assert report.values["lambda"] == pytest.approx(3.0, abs=1e-8)
    assert report.values["density_bound"] == pytest.approx(3.0)
    assert report.values["edge_bound"] == pytest.approx(9.0)


def test_inequality_audit_without_pattern():
    report = inequality_audit(cycle(5), 3.0)
    assert set(report.checks) == {"converged", "uniform_lower_bound"}
    assert report.passed


def test_inequality_audit_requires_a_colouring():
    with pytest.raises(NotColorableError):
        inequality_audit(cycle(5), 2.0, complete_pattern(2, 2))


def test_sequence_audit_for_a_pattern():
    trace = sequence_audit(complete_pattern(2, 2), 2.0, range(4, 10))
    assert trace.direction == "nonincreasing"
    assert trace.monotone
    assert [n for n, _ in trace.values] == list(range(4, 10))
    lower, upper = trace.bracket
    assert lower <= 0.5 + 1e-9 <= upper + 2e-9


def test_sequence_audit_for_a_forbidden_family():
    trace = sequence_audit([complete(3, 2)], 2.0, range(3, 7))
    assert trace.values[0][1] == pytest.approx(math.sqrt(2), abs=1e-8)
    assert trace.values[-1][1] == pytest.approx(3.0, abs=1e-8)
    assert trace.monotone


def test_sequence_audit_needs_uniformity_for_empty_family():
    with pytest.raises(InvalidHypergraphError):
        sequence_audit([], 2.0, range(3, 5))


def test_growth_audit_step_inequality():
    report = growth_audit(complete_pattern(2, 2), 2.0, range(10, 15), density=0.5)
    assert report.passed
    assert len(report.values["steps"]) == 4
    assert report.values["m_xmin"] >= 0


def test_balance_audit_for_complete_tripartite_graphs():
    report = balance_audit(3, 2, 2.0, [6, 7])
    assert report.passed
    assert report.values["argmax"][6] == [[2, 2, 2]]
    assert report.values["max_deviation"] == pytest.approx(2 / 3)


def test_balance_audit_with_deviation_bound():
    report = balance_audit(3, 2, 2.0, 7, m=1.0)
    assert report.checks == {"n7": True}


def test_partite_uniqueness():
    report = partite_uniqueness_audit(2, 2, 2.0, 6)
    assert report.passed
    assert report.values["balanced"] == [3, 3]
    assert report.values["gap"] == pytest.approx(3 - math.sqrt(8), abs=1e-8)


def test_orbit_constancy_on_turan_graph():
    report = orbit_constancy_audit(turan_hypergraph(5, 2, 2), 2.0)
    assert report.passed
    assert report.values["spread"] <= 1e-6


def test_spex_equals_ex_for_bipartite_graphs():
    report = spex_eq_ex_audit(complete_pattern(2, 2), 4, 2.0)
    assert report.values["hypothesis"]
    assert report.checks["spex_equals_ex"]
    assert report.passed


def test_expansion_spex_for_triangles():
    report = expansion_spex_audit(complete(3, 2), 2, 2, 2.0, 5)
    assert report.checks["unique_turan_witness"]
    assert report.passed


def test_expansion_spex_requires_colour_critical_graph():
    with pytest.raises(InvalidHypergraphError):
        expansion_spex_audit(cycle(4), 2, 2, 2.0, 5)


def test_mindeg_audit_on_triangle_free_graphs():
    report = mindeg_audit([complete(3, 2)], complete_pattern(2, 2), 2.0, 6, 0.2, density=0.5)
    assert report.checks == {"witness0": True}
    assert report.values["degree_bound"] == pytest.approx(2.4)


def test_principal_ratio_trace():
    report = principal_ratio_trace(complete_pattern(2, 2), 2.0, range(4, 9))
    trace = dict((int(n), gamma) for n, gamma in report.values["trace"])
    assert trace[6] == pytest.approx(1.0, abs=1e-6)
    assert trace[5] == pytest.approx(math.sqrt(3 / 2), abs=1e-6)
    assert report.passed


def test_spectral_gap_trace():
    report = spectral_gap_trace(complete_pattern(2, 2), 2.0, range(4, 8), density=0.5)
    assert report.passed
    terms = dict((int(n), t) for n, t in report.values["trace"])
    assert terms[4] == pytest.approx(0.0, abs=1e-8)


@pytest.mark.parametrize("alpha,r", [(1.5, 2), (2.0, 3), (3.0, 3), (10.0, 4)])
def test_fact1_decreasing(alpha, r):
    assert fact1_check(alpha, r)
    x, f = fact1_values(alpha, r, 50)
    assert f[0] == pytest.approx(1.0)
    assert len(x) == 50


def test_lemma_threshold_is_stable_up_to_the_cap():
    threshold = lemma_t5_threshold(2.0, 3, 1, m_cap=500)
    assert threshold is not None
    assert np.all(lemma_t5_gap(2.0, 3, 1, np.arange(threshold, 501)) >= 0)


def test_analytic_inputs_are_validated():
    with pytest.raises(SolverError):
        fact1_check(1.0, 3)
    with pytest.raises(SolverError):
        lemma_t5_gap(2.0, 3, 4, [5])
    with pytest.raises(SolverError):
        lemma_t5_gap(2.0, 3, 1, [2])
    with pytest.raises(SolverError):
        xmin_log_bound(1, 2.0, 2)


def test_xmin_log_bound():
    expected = (1 - 2 / (2 * math.log(100))) / 100
    assert xmin_log_bound(100, 2.0, 2) == pytest.approx(expected)
