"""Turán-type extremal problems for cliques, matchings and linear forests.

Graph constructions, exact freeness tests, shifting and closure transforms,
closed-form extremal values and an exhaustive search engine to check them.
"""
from ._backend import BACKEND
from .freeness import (
    LinearForestWitness,
    MatchingWitness,
    clique_number,
    count_cliques,
    is_clique_free,
    is_linear_forest_free,
    is_matching_free,
    linear_forest_number,
    matching_number,
    max_linear_forest,
    max_matching,
    min_path_cover,
)
from .formulas import (
    ParameterWindowError,
    ex_clique_linear_forest,
    ex_clique_matching,
    gex_clique_matching,
    gex_linear_forest,
    gex_matching,
    turan_clique_count,
    turan_number,
)
from .graph import (
    Coloring,
    Graph,
    Graph6Error,
    GraphError,
    complete_graph,
    complete_multipartite,
    decode_graph6,
    empty_graph,
    encode_graph6,
    extremal_construction,
    greedy_coloring,
    join,
    turan_graph,
)
from .transforms import closure, full_shift, shift, strong_closure, strong_shift

__version__ = "0.1.0"
