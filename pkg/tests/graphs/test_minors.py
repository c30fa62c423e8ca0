import pytest

from outerdom.exceptions import CapabilityError, InputError
from outerdom.graphs.core import Graph
from outerdom.graphs.minors import K4, K23, find_minor, has_minor, is_valid_model, model_quotient
from outerdom.outerplanar.generators import gen_path_power
from tests.conftest import atlas_graphs, nx_is_outerplanar


def test_patterns_contain_themselves():
    assert has_minor(K4, K4)
    assert has_minor(K23, K23)
    assert not has_minor(K23, K4)


def test_k4_contains_no_k23():
    # K23 has five vertices
    assert not has_minor(K4, K23)


def test_cycles_have_no_forbidden_minor():
    c5 = Graph.cycle(5)
    assert not has_minor(c5, K4)
    assert not has_minor(c5, K23)


def test_path_power_has_no_k23():
    assert not has_minor(gen_path_power(10), K23)
    assert not has_minor(gen_path_power(10), K4)


def test_subdivided_k4_certificate():
    # K4 with edge (0, 1) subdivided by vertex 4 and edge (2, 3) by vertex 5
    g = Graph.from_edges(6, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 5), (5, 3)])
    model = find_minor(g, K4)
    assert model is not None
    assert model.pattern == "K4"
    assert is_valid_model(g, model)
    assert model_quotient(g, model) == K4


def test_k23_certificate_without_k4():
    # adding the hub edge keeps the graph K4-minor-free
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    model = find_minor(g, K23)
    assert model is not None and is_valid_model(g, model)
    assert find_minor(g, K4) is None



def test_invalid_model_is_detected():
    model = find_minor(K4, K4)
    assert model is not None
    broken = type(model)(model.pattern, (model.branch_sets[0],) * 4)
    assert not is_valid_model(K4, broken)


def test_unsupported_pattern():
    with pytest.raises(InputError):
        find_minor(K4, Graph.complete(3))


def test_size_limit():
    with pytest.raises(CapabilityError):
        find_minor(Graph.cycle(13), K4)


def test_minor_free_iff_outerplanar_on_atlas():
    for g in atlas_graphs(6):
        expected = nx_is_outerplanar(g)
        forbidden = [find_minor(g, p) for p in (K4, K23)]
        assert (forbidden == [None, None]) == expected
        for model in forbidden:
            if model is not None:
                assert is_valid_model(g, model)
