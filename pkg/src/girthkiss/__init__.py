"""Girth, kissing number and related invariants of finite multigraphs."""

from .graph_core import MultiGraph, from_edge_list, from_graph6, to_graph6
from .invariants import INFINITE, bounds_report, compute_invariants, depth, girth, kissing_number

__all__ = [
    "INFINITE",
    "MultiGraph",
    "bounds_report",
    "compute_invariants",
    "depth",
    "from_edge_list",
    "from_graph6",
    "girth",
    "kissing_number",
    "to_graph6",
]

__version__ = "0.1.0"
