"""fanfree: exact triangle maximization in graphs with no k-fan.

A k-fan is k triangles sharing exactly one common vertex.  The package
builds the extremal constructions, evaluates the closed-form triangle
counts, detects fans through neighborhood matchings, runs the discharging
weight machinery as executable invariants, and certifies the formulas at
small scale by exhaustive search.
"""

from .canon import are_isomorphic, canonical_form, canonical_graph, canonical_order
from .constructions import (
    ConstructionSpec,
    DegseqBounds,
    FormulaResult,
    Kind,
    build,
    build_gl,
    build_hk,
    build_hk_prime,
    degseq_triangle_bounds,
    ex3_star,
    ex_k3_fan,
    extremal_construction,
)
from .graph import (
    MAX_VERTICES,
    CapacityError,
    Graph,
    Graph6ParseError,
    GraphInputError,
    PreconditionError,
    check_graphical,
    complement,
    complete_graph,
    cycle_graph,
    degree_sequence,
    disjoint_union,
    empty_graph,
    from_edges,
    graph6_decode,
    graph6_encode,
    induced,
    is_graphical,
    join,
    relabel,
)
from .matching import (
    FanWitness,
    MatchingResult,
    contains_fan,
    contains_star,
    fan_center_order,
    fan_update_safe,
    is_fan_free,
    matching_number,
    matching_number_bruteforce,
    max_matching,
    neighborhood_graph,
    tutte_berge_check,
    tutte_berge_value,
)
from .search import (
    DegseqStats,
    SearchReport,
    degseq_enumerate,
    exhaustive_extremal,
    generate_all,
    hill_climb,
)
from .triangles import (
    GoodmanReport,
    TriangleTable,
    TripleSystem,
    cherry_count,
    cherry_identity_check,
    codegree,
    count_triangles,
    goodman_check,
    lift,
    triangle_count,
)
from .weights import (
    EdgeClass,
    EdgeClassification,
    LemmaReport,
    Scheme,
    TightVertexProfile,
    WeightLedger,
    classify_edges,
    edge_weight_sum,
    lemma_suite,
    tight_vertex_profile,
    triangle_edge_weights,
    vertex_class_counts,
    weigh,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "CapacityError",
    "ConstructionSpec",
    "DegseqBounds",
    "DegseqStats",
    "EdgeClass",
    "EdgeClassification",
    "FanWitness",
    "FormulaResult",
    "GoodmanReport",
    "Graph",
    "Graph6ParseError",
    "GraphInputError",
    "Kind",
    "LemmaReport",
    "MatchingResult",
    "PreconditionError",
    "Scheme",
    "SearchReport",
    "TightVertexProfile",
    "TriangleTable",
    "TripleSystem",
    "WeightLedger",
    "are_isomorphic",
    "build",
    "build_gl",
    "build_hk",
    "build_hk_prime",
    "canonical_form",
    "canonical_graph",
    "canonical_order",
    "check_graphical",
    "cherry_count",
    "cherry_identity_check",
    "classify_edges",
    "codegree",
    "complement",
    "complete_graph",
    "contains_fan",
    "contains_star",
    "count_triangles",
    "cycle_graph",
    "degree_sequence",
    "degseq_enumerate",
    "degseq_triangle_bounds",
    "disjoint_union",
    "edge_weight_sum",
    "empty_graph",
    "ex3_star",
    "ex_k3_fan",
    "exhaustive_extremal",
    "extremal_construction",
    "fan_center_order",
    "fan_update_safe",
    "from_edges",
    "generate_all",
    "goodman_check",
    "graph6_decode",
    "graph6_encode",
    "hill_climb",
    "induced",
    "is_fan_free",
    "is_graphical",
    "join",
    "lemma_suite",
    "lift",
    "matching_number",
    "matching_number_bruteforce",
    "max_matching",
    "neighborhood_graph",
    "relabel",
    "tight_vertex_profile",
    "triangle_edge_weights",
    "triangle_count",
    "tutte_berge_check",
    "tutte_berge_value",
    "vertex_class_counts",
    "weigh",
]
