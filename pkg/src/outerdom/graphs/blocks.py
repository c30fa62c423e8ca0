"""Block (biconnected component) decomposition."""

import networkx as nx

from outerdom.graphs.core import Graph, VertexSet


def biconnected_components(g: Graph) -> list[VertexSet]:
    """Blocks of ``g``, ordered by their sorted vertex lists.

    Every edge lies in exactly one block, cut vertices lie in several, and an isolated vertex
    forms a block on its own.
    """
    h = g.to_networkx()
    blocks = [VertexSet.of(g.n, comp) for comp in nx.biconnected_components(h)]
    blocks.extend(VertexSet.of(g.n, [v]) for v in range(g.n) if not g.adj[v])
    return sorted(blocks, key=VertexSet.to_list)


def cut_vertices(g: Graph) -> list[int]:
    return sorted(nx.articulation_points(g.to_networkx()))
