import numpy as np
import pytest

from outerdom.analysis.partition import central_selection
from outerdom.exceptions import InputError, ProtocolError
from outerdom.graphs.core import Graph
from outerdom.local import get_program, get_program_class
from outerdom.local.programs import DegreeBroadcastProgram, ThresholdProgram, forest_program
from outerdom.local.simulator import run_algorithm1, run_sync
from outerdom.oracles.domination import is_dominating


class _OverflowProgram(ThresholdProgram):
    def compose(self, round_, state):
        return [2] * state.degree


class _ShortProgram(ThresholdProgram):
    def compose(self, round_, state):
        return []


def test_path_on_three_vertices_selects_everything():
    assert run_algorithm1(Graph.path(3)).chosen.to_list() == [0, 1, 2]


def test_star_selects_only_center():
    star = Graph.complete_bipartite(1, 5)
    assert run_algorithm1(star).chosen.to_list() == [0]


def test_path_power_selection(g10):
    assert run_algorithm1(g10).chosen.to_list() == [2, 3, 4, 5, 6, 7]


def test_single_vertex_joins():
    assert run_algorithm1(Graph.empty(1)).chosen.to_list() == [0]


def test_trace_has_one_bit_per_edge_direction(g10):
    result = run_algorithm1(g10, record_trace=True)
    trace = result.trace
    assert trace.rounds == 1
    assert len(trace.messages) == 2 * g10.m
    assert {symbol for *_, symbol in trace.messages} == {0, 1}
    # vertex 2 has degree 4 and tells its neighbor 0 so
    assert (1, 2, 0, 1) in trace.messages
    data = trace.to_dict()
    assert data["chosen"] == result.chosen.to_list()
    assert data["messages"][0] == list(trace.messages[0])


def test_no_trace_by_default():
    assert run_algorithm1(Graph.path(4)).trace is None


def test_zero_rounds_uses_local_degree_only():
    prog = ThresholdProgram(threshold=0)
    assert run_sync(Graph.path(3), prog, 0).chosen.to_list() == [0, 1, 2]


def test_negative_rounds():
    with pytest.raises(InputError):
        run_sync(Graph.path(3), ThresholdProgram(), -1)


def test_symbol_outside_alphabet():
    with pytest.raises(ProtocolError, match="alphabet"):
        run_sync(Graph.path(3), _OverflowProgram(), 1)


def test_wrong_number_of_messages():
    with pytest.raises(ProtocolError, match="ports"):
        run_sync(Graph.path(3), _ShortProgram(), 1)


def test_degree_broadcast_matches_one_bit_program(random_graphs):
    for g in random_graphs:
        assert run_sync(g, DegreeBroadcastProgram(threshold=4), 1).chosen == run_algorithm1(g).chosen


def test_selection_matches_central_rule_and_dominates(random_graphs, random_outerplanar):
    for g in random_graphs + random_outerplanar:
        chosen = run_algorithm1(g).chosen
        assert chosen == central_selection(g)
        assert is_dominating(g, chosen)


def test_selection_is_anonymous(random_outerplanar):
    rng = np.random.default_rng(1)
    for g in random_outerplanar[:50]:
        perm = [int(x) for x in rng.permutation(g.n)]
        relabeled = run_algorithm1(g.relabel(perm)).chosen
        assert sorted(perm[v] for v in run_algorithm1(g).chosen) == relabeled.to_list()


def test_forest_program_on_star_and_path():
    assert run_sync(Graph.complete_bipartite(1, 3), forest_program(), 1).chosen.to_list() == [0]
    assert run_sync(Graph.from_edges(2, [(0, 1)]), forest_program(), 1).chosen.to_list() == [0, 1]


def test_program_registry():
    assert get_program("alg1").config.threshold == 4
    assert get_program("forest").config.threshold == 2
    assert get_program("alg1-degree").name == "degree-broadcast-4"
    assert get_program("alg1", threshold=3).config.threshold == 3
    assert get_program_class("outerdom.local.programs.ThresholdProgram") is ThresholdProgram
    with pytest.raises(InputError):
        get_program("nope")


@pytest.mark.slow
def test_selection_is_anonymous_under_many_relabelings(random_outerplanar, random_graphs):
    rng = np.random.default_rng(5)
    for g in random_outerplanar[:50] + random_graphs[:50]:
        chosen = run_algorithm1(g).chosen
        for _ in range(100):
            perm = [int(x) for x in rng.permutation(g.n)]
            assert sorted(perm[v] for v in chosen) == run_algorithm1(g.relabel(perm)).chosen.to_list()
