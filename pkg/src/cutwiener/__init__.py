"""Wiener index and vertex-distance extremes over connected graphs with k cut vertices."""

from .canon import canonical_certificate, canonical_form, graph_from_certificate
from .enumeration import EnumerationConfig, EnumerationError, generate_class, generate_connected, ingest_graph6
from .families import FamilySpec, build
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    peripherian_vertices,
    vertex_distance,
    vertex_distances,
    wiener_index,
)
from .graph6 import Graph6Error
from .graph6 import decode as decode_graph6
from .graph6 import encode as encode_graph6
from .search import ExtremalRecord, search_max_vertex_distance, search_max_wiener
from .structure import BlockCutDecomposition, count_cut_vertices, decompose
from .verify import CheckReport, Scope, check_suite, explore_conjecture, surgery_pendant_block_to_cycle

__all__ = [
    "BlockCutDecomposition",
    "CheckReport",
    "DisconnectedGraphError",
    "EnumerationConfig",
    "EnumerationError",
    "ExtremalRecord",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "GraphError",
    "Scope",
    "build",
    "canonical_certificate",
    "canonical_form",
    "check_suite",
    "count_cut_vertices",
    "decode_graph6",
    "decompose",
    "encode_graph6",
    "explore_conjecture",
    "generate_class",
    "generate_connected",
    "graph_from_certificate",
    "ingest_graph6",
    "peripherian_vertices",
    "search_max_vertex_distance",
    "search_max_wiener",
    "surgery_pendant_block_to_cycle",
    "vertex_distance",
    "vertex_distances",
    "wiener_index",
]
