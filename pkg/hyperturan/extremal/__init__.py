"""EX / SPEX searches, the colourable-candidate pipeline and the theorem audits."""

from hyperturan.extremal.analytic import fact1_check, lemma_t5_threshold, xmin_log_bound
from hyperturan.extremal.audits import (
    balance_audit,
    expansion_spex_audit,
    growth_audit,
    inequality_audit,
    mindeg_audit,
    orbit_constancy_audit,
    partite_uniqueness_audit,
    principal_ratio_trace,
    sequence_audit,
    spectral_gap_trace,
    spex_eq_ex_audit,
)
from hyperturan.extremal.colorable import (
    composition_scan,
    ex_col,
    ex_col_union,
    spex_col,
    spex_col_union,
)
from hyperturan.extremal.search import spectral_extremal, turan_number
from hyperturan.extremal.types import AuditReport, ExtremalReport, SequenceTrace, Witness

__all__ = [
    "AuditReport",
    "ExtremalReport",
    "SequenceTrace",
    "Witness",
    "balance_audit",
    "composition_scan",
    "ex_col",
    "ex_col_union",
    "expansion_spex_audit",
    "fact1_check",
    "growth_audit",
    "inequality_audit",
    "lemma_t5_threshold",
    "mindeg_audit",
    "orbit_constancy_audit",
    "partite_uniqueness_audit",
    "principal_ratio_trace",
    "sequence_audit",
    "spectral_extremal",
    "spectral_gap_trace",
    "spex_col",
    "spex_col_union",
    "spex_eq_ex_audit",
    "turan_number",
    "xmin_log_bound",
]
