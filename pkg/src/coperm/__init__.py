"""Exact permanental/characteristic polynomial census of small graphs."""

from .backend import BACKEND
from .charpoly import char_poly, determinant_exact
from .collide import (
    FamilyRecord,
    ShardStats,
    aggregate,
    fingerprint,
    group_families,
    group_sorted,
    merge_sorted_runs,
    persist_fingerprints,
    shard_stats,
)
from .enumerate import GraphStream, enumerate_by_edges, enumerate_graphs, ingest_graph6
from .graphs import (
    Graph,
    adjacency_char_matrix,
    canonical_form,
    edge_count,
    graph_from_edges,
    parse_graph6,
    permute,
    to_graph6,
)
from .permanent import permanent_naive, permanent_ryser, perm_poly, perm_poly_symbolic
from .pipeline import CensusResult, run_census, run_ingest_census

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CensusResult",
    "FamilyRecord",
    "Graph",
    "GraphStream",
    "ShardStats",
    "adjacency_char_matrix",
    "aggregate",
    "canonical_form",
    "char_poly",
    "determinant_exact",
    "edge_count",
    "enumerate_by_edges",
    "enumerate_graphs",
    "fingerprint",
    "graph_from_edges",
    "group_families",
    "group_sorted",
    "ingest_graph6",
    "merge_sorted_runs",
    "parse_graph6",
    "perm_poly",
    "perm_poly_symbolic",
    "permanent_naive",
    "permanent_ryser",
    "permute",
    "persist_fingerprints",
    "run_census",
    "run_ingest_census",
    "shard_stats",
    "to_graph6",
    "__version__",
]
