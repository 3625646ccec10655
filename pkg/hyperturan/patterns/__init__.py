"""r-patterns, P-colourings, maximal colourable graphs and pattern densities."""

from hyperturan.patterns.construction import (
    clone_vertex,
    composition_edge_counts,
    maximal_colorable,
    maximal_colorable_edges,
)
from hyperturan.patterns.density import DensityEstimate, ex_col_count, pattern_density
from hyperturan.patterns.homomorphism import (
    ClosureReport,
    Coloring,
    closure_check,
    find_homomorphism,
    is_colorable,
    is_valid_coloring,
)
from hyperturan.patterns.pattern import (
    Pattern,
    chromatic_pattern,
    complete_pattern,
    empty_pattern,
    multinomial_polynomial,
    new_pattern,
    parse_pattern,
    pattern_from_hypergraph,
    resolve_pattern,
    single_color_pattern,
)
from hyperturan.patterns.stability import degree_stability_probe

__all__ = [
    "ClosureReport",
    "Coloring",
    "DensityEstimate",
    "Pattern",
    "chromatic_pattern",
    "clone_vertex",
    "closure_check",
    "complete_pattern",
    "composition_edge_counts",
    "degree_stability_probe",
    "empty_pattern",
    "ex_col_count",
    "find_homomorphism",
    "is_colorable",
    "is_valid_coloring",
    "maximal_colorable",
    "maximal_colorable_edges",
    "multinomial_polynomial",
    "new_pattern",
    "parse_pattern",
    "pattern_from_hypergraph",
    "resolve_pattern",
    "single_color_pattern",
]
