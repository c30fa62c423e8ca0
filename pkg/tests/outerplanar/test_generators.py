from collections import Counter

import pytest

from outerdom.exceptions import InputError
from outerdom.graphs.canonical import canonical_code
from outerdom.outerplanar.generators import (
    enumerate_triangulations,
    gen_cycle_power,
    gen_path_power,
    gen_planar_gadget,
    gen_random_maximal_outerplanar,
    gen_random_outerplanar,
    path_power_order,
    spawn_seeds,
)
from outerdom.outerplanar.recognition import is_outerplanar


def test_path_power_shape():
    g = gen_path_power(10)
    assert g.m == 17
    assert g.degrees == (2, 3, 4, 4, 4, 4, 4, 4, 3, 2)
    with pytest.raises(InputError):
        gen_path_power(2)


def test_cycle_power_minus_wrap_edges_is_path_power():
    assert gen_cycle_power(10).remove_edges([(9, 0), (8, 0), (9, 1)]) == gen_path_power(10)
    assert all(d == 4 for d in gen_cycle_power(10).degrees)


@pytest.mark.parametrize(("p", "q"), [(1, 1), (3, 4), (5, 5)])
def test_planar_gadget_shape(p, q):
    g = gen_planar_gadget(p, q)
    collector = g.n - 1
    assert g.n == p + p * q + 2
    assert g.m == p + 2 * p * q
    assert g.degrees[0] == p
    assert g.degrees[collector] == p * q
    assert all(g.degrees[i] == q + 1 for i in range(1, p + 1))
    assert g.is_connected()


def test_planar_gadget_rejects_empty_parameters():
    with pytest.raises(InputError):
        gen_planar_gadget(0, 3)


@pytest.mark.parametrize("n", [3, 4, 10, 57])
def test_random_maximal_outerplanar(n):
    g = gen_random_maximal_outerplanar(n, seed=n)
    assert g.m == 2 * n - 3
    assert g.is_connected()
    assert is_outerplanar(g, certify=False).verdict


def test_random_generators_are_deterministic():
    assert gen_random_maximal_outerplanar(30, 11) == gen_random_maximal_outerplanar(30, 11)
    assert gen_random_maximal_outerplanar(30, 11) != gen_random_maximal_outerplanar(30, 12)
    assert gen_random_outerplanar(30, 0.5, 3) == gen_random_outerplanar(30, 0.5, 3)


def test_keep_prob_extremes():
    assert gen_random_outerplanar(20, 1.0, 9) == gen_random_maximal_outerplanar(20, 9)
    assert gen_random_outerplanar(20, 0.0, 9).m == 0


@pytest.mark.parametrize(("keep_prob", "seed"), [(1.5, 0), (-0.1, 0), (0.5, -1), (0.5, 2**64)])
def test_random_generator_rejects_bad_parameters(keep_prob, seed):
    with pytest.raises(InputError):
        gen_random_outerplanar(10, keep_prob, seed)


def test_four_vertex_triangulations_are_uniform():
    seeds = spawn_seeds(0, 4000)
    chord_02 = sum(gen_random_maximal_outerplanar(4, s).has_edge(0, 2) for s in seeds)
    assert abs(chord_02 / len(seeds) - 0.5) < 0.05


def test_five_vertex_triangulations_are_uniform():
    seeds = spawn_seeds(1, 5000)
    counts = Counter(frozenset(gen_random_maximal_outerplanar(5, s).edges()) for s in seeds)
    assert len(counts) == 5
    assert all(abs(c / len(seeds) - 0.2) < 0.04 for c in counts.values())


@pytest.mark.parametrize(("n", "catalan"), [(3, 1), (4, 2), (5, 5), (6, 14), (7, 42), (8, 132)])
def test_triangulation_count(n, catalan):
    triangulations = list(enumerate_triangulations(n))
    assert len(triangulations) == catalan
    assert len({frozenset(t.edges()) for t in triangulations}) == catalan
    assert all(t.m == 2 * n - 3 for t in triangulations)


def test_six_vertex_triangulation_classes():
    # fan, zigzag and the central triangle
    assert len({canonical_code(t) for t in enumerate_triangulations(6)}) == 3


def test_spawn_seeds():
    assert spawn_seeds(5, 3) == spawn_seeds(5, 3)
    assert len(set(spawn_seeds(5, 100))) == 100
    assert spawn_seeds(5, 2) == spawn_seeds(5, 3)[:2]


@pytest.mark.parametrize("n", [3, 4, 9, 10])
def test_path_power_order_is_the_outer_cycle(n):
    order = path_power_order(n)
    assert sorted(order) == list(range(n))
    assert all(gen_path_power(n).has_edge(order[i], order[(i + 1) % n]) for i in range(n))
