import networkx as nx
import numpy as np
import pytest

from outerdom.exceptions import CapabilityError
from outerdom.graphs.canonical import (
    canonical_code,
    canonical_code_of_masks,
    canonical_form,
    canonical_graph,
    graph_from_code,
)
from outerdom.graphs.core import Graph
from tests.conftest import atlas_graphs


def test_eleven_graphs_on_four_vertices():
    graphs = [g for g in atlas_graphs(4) if g.n == 4]
    assert len(graphs) == 11
    assert len({canonical_code(g) for g in graphs}) == 11


def test_atlas_codes_are_distinct():
    graphs = atlas_graphs(6)
    assert len({canonical_code(g) for g in graphs}) == len(graphs)


def test_code_is_permutation_invariant():
    rng = np.random.default_rng(3)
    for i in range(200):
        n = int(rng.integers(1, 10))
        g = Graph.from_networkx(nx.gnp_random_graph(n, 0.4, seed=i))
        perm = [int(x) for x in rng.permutation(n)]
        assert canonical_code(g.relabel(perm)) == canonical_code(g)


def test_twins_do_not_break_canonicity():
    # many interchangeable vertices exercise twin pruning
    for g in (Graph.complete_bipartite(3, 4), Graph.complete(6), Graph.empty(5), Graph.cycle(8)):
        for shift in range(1, g.n):
            perm = [(v + shift) % g.n for v in range(g.n)]
            assert canonical_code(g.relabel(perm)) == canonical_code(g)


def test_canonical_graph_decodes_from_code():
    g = Graph.from_edges(5, [(0, 4), (4, 2), (2, 1)])
    code, order = canonical_form(g)
    assert sorted(order) == list(range(5))
    rep = canonical_graph(g)
    assert graph_from_code(code) == rep
    assert canonical_code(rep) == code
    assert nx.is_isomorphic(rep.to_networkx(), g.to_networkx())


def test_codes_from_masks_match():
    g = Graph.cycle(6)
    assert canonical_code_of_masks(g.masks) == canonical_code(g)


def test_small_graphs():
    assert canonical_code(Graph.empty(0)) == bytes([0])
    assert graph_from_code(canonical_code(Graph.empty(1))) == Graph.empty(1)
    assert canonical_code(Graph.path(3)) != canonical_code(Graph.complete(3))


def test_size_limit():
    with pytest.raises(CapabilityError):
        canonical_code(Graph.empty(17))
