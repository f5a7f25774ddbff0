"""Signed graphs, switching and balance, and exact double domination."""

from .constructions import (
    BoundReport,
    ConstructionResult,
    build_family,
    construct_family,
    construct_gcd1,
    construct_gcd_d,
    construct_igraph,
    construct_pn1,
    construct_pn1_tight,
    sweep_cases,
    upper_bound,
)
from .domination import (
    Budget,
    DdsVerdict,
    HalfDdsReport,
    InfeasibleError,
    NotCubicError,
    SolveResult,
    WrongCardinalityError,
    analyze_half_dds,
    cubic_lower_bound,
    domination_multiplicity,
    is_k_tuple_dominating,
    is_signed_dds,
    min_k_tuple_dominating,
    min_signed_dds,
    min_signed_dds_many,
)
from .fileio import (
    EdgeListFormatError,
    FamilyInfo,
    format_vertex_set,
    parse_vertex_spec,
    read_edge_list,
    read_graph_any,
    read_signed_edge_list,
    write_edge_list,
    write_signed_edge_list,
)
from .families import (
    FamilyGraph,
    InvalidParametersError,
    igraph,
    index_to_label,
    inner_blocks,
    k4_union,
    label_to_index,
    petersen,
)
from .graph import (
    CycleDecomposition,
    EdgeCut,
    Graph,
    NotEvenGraphError,
    SizeLimitExceededError,
    canonical_cycle,
    cut_subgraph,
    cycle_decomposition,
    edge_cut,
    enumerate_cycles,
    is_even,
    is_forest,
    vertex_subset,
)
from .signed import (
    BalanceCertificate,
    NotACycleError,
    SignedGraph,
    UnderlyingGraphMismatchError,
    all_positive,
    cycle_sign,
    is_balanced,
    negative_cycle_set,
    random_signature,
    switch,
    switching_equivalent,
)

__version__ = "0.1.0"
