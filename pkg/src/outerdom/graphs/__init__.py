"""Simple graphs, multigraphs, contraction, blocks, canonical codes and minor search."""

from outerdom.graphs.blocks import biconnected_components, cut_vertices
from outerdom.graphs.canonical import canonical_code, canonical_form, canonical_graph, graph_from_code
from outerdom.graphs.core import Graph, Multigraph, VertexSet, contract_set, degree
from outerdom.graphs.io import format_graph, parse_graph, read_graph, write_graph
from outerdom.graphs.minors import K4, K23, MinorModel, find_minor, has_minor, is_valid_model

__all__ = [
    "Graph",
    "Multigraph",
    "VertexSet",
    "degree",
    "contract_set",
    "biconnected_components",
    "cut_vertices",
    "canonical_code",
    "canonical_form",
    "canonical_graph",
    "graph_from_code",
    "K4",
    "K23",
    "MinorModel",
    "find_minor",
    "has_minor",
    "is_valid_model",
    "format_graph",
    "parse_graph",
    "read_graph",
    "write_graph",
]
