"""Conflict-free colouring of closed neighbourhoods in O(log^2 Delta) colours."""

from .decomposition import AbcPartition, ConsistencyError, maximal_distance3_set, partition_abc
from .graph import Graph, GraphFormatError, ball, generate, induced_subgraph, max_degree, parse_edge_list
from .hypergraph import (
    BudgetExhausted,
    CfColoring,
    CfParams,
    Hypergraph,
    OracleSizeError,
    cf_color,
    exact_cf_number,
    find_violated_edges,
    max_edge_intersection,
    palette_size,
    verify_cf,
)
from .oracle import CfcnReport, exact_chi_cn, greedy_cfcn_baseline, verify_cfcn
from .pipeline import (
    CfcnColoring,
    CfcnRunStats,
    LayerDecomposition,
    build_residual_hypergraph,
    cfcn_color,
    decompose_layers,
    iteration_cap,
    theorem_parameters,
)

__version__ = "0.1.0"
