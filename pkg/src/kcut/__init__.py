"""Exact k-edge-connectivity of small graphs, with the surrounding bounds,
extremal characterizations and the extremal function f(n, k, t)."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    DisconnectedGraph,
    GraphTooLarge,
    KCutError,
    MethodMismatch,
    ParseError,
    TheoremViolation,
)
from .graph import (
    Graph,
    GraphFamily,
    bridges,
    components,
    line_graph,
    make_family,
    max_degree,
    min_degree,
)
from .io import parse_edge_list, parse_graph6, to_graph6
from .partitions import Partition
from .solver import (
    CutCertificate,
    crossing_edges,
    global_min_cut,
    lambda_k_bb,
    lambda_k_enumerate,
)
