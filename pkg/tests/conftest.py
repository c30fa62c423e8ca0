import networkx as nx
import numpy as np
import pytest

from outerdom.graphs.core import Graph, VertexSet
from outerdom.outerplanar.generators import gen_path_power, gen_random_outerplanar, spawn_seeds

FIG3_NAMES = ["s1", "s2", "s3", "s4", "b1", "a1", "a2", "a3", "a4", "d1", "d2"]
FIG3_EDGES = [
    ("s1", "b1"),
    ("s1", "a2"),
    ("b1", "a1"),
    ("a2", "d1"),
    ("s2", "a1"),
    ("s2", "d1"),
    ("s3", "a3"),
    ("s3", "a4"),
    ("b1", "a3"),
    ("b1", "a4"),
    ("s4", "s1"),
    ("s4", "a4"),
    ("s4", "d2"),
]


@pytest.fixture
def fig3():
    """The example graph for H_G(S): returns (graph, S, name -> vertex)."""
    index = {name: i for i, name in enumerate(FIG3_NAMES)}
    g = Graph.from_edges(len(FIG3_NAMES), [(index[u], index[v]) for u, v in FIG3_EDGES])
    s = VertexSet.of(g.n, [index[x] for x in ("s1", "s2", "s3", "s4")])
    return g, s, index


@pytest.fixture
def g10():
    return gen_path_power(10)


@pytest.fixture
def random_outerplanar():
    """Deterministic random outerplanar graphs with 4..16 vertices."""
    rng = np.random.default_rng(2024)
    seeds = spawn_seeds(11, 200)
    return [
        gen_random_outerplanar(int(rng.integers(4, 17)), float(rng.uniform(0.5, 1.0)), seed) for seed in seeds
    ]


@pytest.fixture
def random_graphs():
    """Arbitrary (mostly non-outerplanar) random graphs."""
    rng = np.random.default_rng(7)
    graphs = []
    for i in range(150):
        n = int(rng.integers(1, 13))
        p = float(rng.uniform(0.1, 0.7))
        graphs.append(Graph.from_networkx(nx.gnp_random_graph(n, p, seed=i)))
    return graphs


def nx_is_outerplanar(g: Graph) -> bool:
    """A graph is outerplanar iff adding one vertex adjacent to everything keeps it planar."""
    h = g.to_networkx()
    h.add_edges_from(("apex", v) for v in range(g.n))
    return nx.check_planarity(h)[0]


def atlas_graphs(max_n: int) -> list[Graph]:
    """Every graph on at most ``max_n <= 7`` vertices, one per isomorphism class."""
    return [Graph.from_networkx(h) for h in nx.graph_atlas_g() if 0 < h.number_of_nodes() <= max_n]
