from fractions import Fraction

import pytest

from outerdom.analysis.audit import audit_components, lemma22_audit
from outerdom.exceptions import InputError
from outerdom.graphs.canonical import canonical_code
from outerdom.graphs.core import Graph, VertexSet
from outerdom.oracles.bruteforce import exact_mds_bruteforce
from outerdom.oracles.domination import enumerate_minimal_dominating_sets
from outerdom.outerplanar.enumeration import enumerate_corpus


def test_fig3_audit(fig3):
    g, s, _ = fig3
    report = lemma22_audit(g, s)
    assert (report.s_size, report.b_size, report.d_size, report.bd_union_size) == (4, 1, 3, 4)
    assert (report.edges_h, report.edges_h_simple, report.max_multiplicity) == (6, 4, 2)
    assert report.all_ok
    assert report.check("simple_edges").rhs == 5
    assert report.check("edges_lower").rhs == Fraction(1, 2)
    assert report.check("d_bound").rhs == 12
    assert report.check("bd_bound").rhs == 156


def test_to_dict(fig3):
    g, s, _ = fig3
    data = lemma22_audit(g, s).to_dict()
    assert data["all_ok"] is True
    names = [check["name"] for check in data["bound_checks"]]
    assert names == ["max_multiplicity", "simple_edges", "edges_upper", "edges_lower", "d_bound", "bd_bound"]
    lower = data["bound_checks"][3]
    assert lower == {"name": "edges_lower", "lhs": 6, "relation": ">=", "rhs": 0.5, "ok": True}


def test_single_member_set_has_no_edges():
    report = lemma22_audit(Graph.complete_bipartite(1, 5), VertexSet.of(6, [0]))
    assert report.edges_h == 0
    assert report.check("simple_edges").rhs == 0
    assert report.all_ok


def test_unknown_check_name(fig3):
    g, s, _ = fig3
    with pytest.raises(KeyError):
        lemma22_audit(g, s).check("nope")


def test_bounds_hold_for_minimal_sets(random_outerplanar):
    audited = 0
    for g in random_outerplanar:
        if g.n > 10 or not g.is_connected():
            continue
        for s in enumerate_minimal_dominating_sets(g):
            assert lemma22_audit(g, s, check_outerplanar=False).all_ok
            audited += 1
    assert audited > 0


def test_random_tie_break_keeps_bounds(fig3):
    g, s, _ = fig3
    for seed in range(10):
        assert lemma22_audit(g, s, "random", seed=seed).all_ok


@pytest.mark.parametrize(
    ("g", "members", "match"),
    [
        (Graph.from_edges(4, [(0, 1), (2, 3)]), [0, 2], "connected"),
        (Graph.complete(4), [0], "outerplanar"),
        (Graph.path(5), [0, 4], "does not dominate"),
    ],
)
def test_rejected_inputs(g, members, match):
    with pytest.raises(InputError, match=match):
        lemma22_audit(g, VertexSet.of(g.n, members))


def test_components_are_audited_separately():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    reports = audit_components(g, VertexSet.of(6, [1, 4]))
    assert [originals for originals, _ in reports] == [(0, 1, 2), (3, 4, 5)]
    assert all(report.s_size == 1 and report.all_ok for _, report in reports)


def test_optimum_of_a_tree():
    g = Graph.from_edges(8, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6), (6, 7)])
    s = exact_mds_bruteforce(g).witness
    report = lemma22_audit(g, s)
    assert report.all_ok
    assert report.edges_h_simple <= max(2 * report.s_size - 3, 0)


@pytest.mark.slow
def test_every_minimal_set_up_to_nine_vertices_passes():
    pairs = 0
    for g in enumerate_corpus(9):
        for s in enumerate_minimal_dominating_sets(g):
            report = lemma22_audit(g, s, check_outerplanar=False)
            assert report.all_ok, (canonical_code(g).hex(), s.to_list())
            pairs += 1
    assert pairs > 0
