"""Uniform hypergraphs: data model, constructors, containment, isomorphism, enumeration."""

from hyperturan.hypergraph.builders import (
    BUILTINS,
    balanced_partition,
    chromatic_turan,
    complete,
    complete_bipartite,
    complete_partite,
    cycle,
    f_rl,
    path,
    resolve_builtin,
    single_edge,
    turan_hypergraph,
)
from hyperturan.hypergraph.coloring import chromatic_number, find_coloring, is_color_critical
from hyperturan.hypergraph.containment import contains_subgraph, find_embedding, is_free
from hyperturan.hypergraph.core import (
    DegreeProfile,
    Hypergraph,
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
)
from hyperturan.hypergraph.enumeration import enumerate_hypergraphs
from hyperturan.hypergraph.isomorphism import (
    canonical_form,
    canonical_graph,
    is_isomorphic,
    transposition_orbits,
)
from hyperturan.hypergraph.textio import format_hypergraph, parse_hypergraph

__all__ = [
    "BUILTINS",
    "DegreeProfile",
    "Hypergraph",
    "VertexPartition",
    "balanced_partition",
    "blow_up",
    "blow_up_class_map",
    "canonical_form",
    "canonical_graph",
    "chromatic_number",
    "chromatic_turan",
    "clone_move",
    "complete",
    "complete_bipartite",
    "complete_partite",
    "contains_subgraph",
    "cycle",
    "degrees",
    "delete_vertex",
    "enumerate_hypergraphs",
    "expansion",
    "f_rl",
    "find_coloring",
    "find_embedding",
    "format_hypergraph",
    "induced_subgraph",
    "is_color_critical",
    "is_edge_maximal",
    "is_free",
    "is_isomorphic",
    "new_hypergraph",
    "parse_hypergraph",
    "path",
    "resolve_builtin",
    "single_edge",
    "transposition_orbits",
    "turan_hypergraph",
]
