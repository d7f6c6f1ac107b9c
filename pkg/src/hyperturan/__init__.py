"""Turán problems for 3-graphs with bounded matching number."""

from __future__ import annotations

from .coloring import (
    graph_chromatic_number,
    hypergraph_chromatic_number,
    link_chromatic_profile,
    min_proper_coloring,
    min_strong_coloring,
    p_value,
    q_value,
)
from .colored import (
    ColoredMultigraph,
    find_star_colored_clique,
    is_star_colored_free,
    max_colored_sum,
)
from .constructions import CATALOG, BuiltConstruction, ConstructionSpec, turan_count, turan_graph
from .containment import contains, find_embedding
from .formulas import formula_conjecture15, formula_emc, formula_gerbner_linear, formula_gerbner_small_s
from .hypergraph import (
    BudgetExceeded,
    Graph2,
    Hypergraph3,
    InputError,
    degree_partition,
    has_matching_of_size,
    link_graph,
    matching_number,
    max_codegree,
)
from .report import Certificate, Report, verify_paper
from .search import SearchInstance, enumerate_extremal, solve

__all__ = [
    "BudgetExceeded", "BuiltConstruction", "CATALOG", "Certificate", "ColoredMultigraph",
    "ConstructionSpec", "Graph2", "Hypergraph3", "InputError", "Report", "SearchInstance",
    "contains", "degree_partition", "enumerate_extremal", "find_embedding",
    "find_star_colored_clique", "formula_conjecture15", "formula_emc", "formula_gerbner_linear",
    "formula_gerbner_small_s", "graph_chromatic_number", "has_matching_of_size",
    "hypergraph_chromatic_number", "is_star_colored_free", "link_chromatic_profile", "link_graph",
    "matching_number", "max_codegree", "max_colored_sum", "min_proper_coloring",
    "min_strong_coloring", "p_value", "q_value", "solve", "turan_count", "turan_graph",
    "verify_paper",
]
