import pytest

from outerdom.analysis.search import Counterexample, counterexample_search, lemma21_check
from outerdom.exceptions import CapabilityError
from outerdom.graphs.core import Graph, VertexSet
from outerdom.oracles.bruteforce import exact_mds_bruteforce
from outerdom.outerplanar.enumeration import enumerate_connected_outerplanar


def test_fig3_satisfies_the_bound(fig3):
    g, s, _ = fig3
    assert lemma21_check(g, s)
    assert not lemma21_check(g, s, constant=0)


def test_path_power_optimum(g10):
    assert lemma21_check(g10, exact_mds_bruteforce(g10).witness)


def test_no_counterexample_up_to_five_vertices():
    assert counterexample_search(5) is None


def test_all_sets_mode():
    assert counterexample_search(5, all_sets=True) is None


def test_weakened_constant_is_caught_immediately():
    found = counterexample_search(6, constant=1)
    assert isinstance(found, Counterexample)
    assert found.graph.n == 3
    assert not lemma21_check(found.graph, found.s, constant=1)
    data = found.to_dict()
    assert data["constant"] == 1
    assert set(data) == {"n", "edges", "code", "set", "constant", "b", "d"}
    assert len(data["b"]) + len(data["d"]) > len(data["set"])


def test_path_on_three_vertices_violates_constant_one():
    assert not lemma21_check(Graph.path(3), VertexSet.of(3, [1]), constant=1)


def test_callback_sees_every_graph():
    seen = []
    assert counterexample_search(4, on_graph=seen.append, threads=2) is None
    assert sorted(g.n for g in seen) == [3] * 2 + [4] * 5


@pytest.mark.parametrize(("n_max", "all_sets"), [(2, False), (11, False), (8, True)])
def test_capability_limits(n_max, all_sets):
    with pytest.raises(CapabilityError):
        counterexample_search(n_max, all_sets=all_sets)


@pytest.mark.slow
def test_no_counterexample_up_to_eight_vertices():
    assert counterexample_search(8, threads=4) is None


def test_search_stops_scheduling_after_a_violation():
    graphs = list(enumerate_connected_outerplanar(8))
    seen = []
    found = counterexample_search(8, constant=1, n_min=8, on_graph=seen.append, threads=1)
    assert found is not None
    # at most a few graphs already picked up by the worker run after the hit
    assert len(seen) <= graphs.index(found.graph) + 8 < len(graphs)


@pytest.mark.slow
def test_no_counterexample_up_to_nine_vertices():
    assert counterexample_search(9, threads=4) is None
