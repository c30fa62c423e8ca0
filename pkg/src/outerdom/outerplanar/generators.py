"""Graph families and seeded random outerplanar generators.

Randomness comes from numpy's PCG64 bit generator seeded through ``SeedSequence``; the same seed
and parameters give the same graph on the same build.
"""

from collections.abc import Callable, Iterator

import numpy as np

from outerdom.exceptions import InputError
from outerdom.graphs.core import Graph

SEED_MAX = 2**64 - 1


def make_rng(seed: int) -> np.random.Generator:
    if not 0 <= seed <= SEED_MAX:
        raise InputError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def spawn_seeds(seed: int, count: int) -> list[int]:
    """Independent child seeds for ``count`` instances of an experiment."""
    if not 0 <= seed <= SEED_MAX:
        raise InputError(f"seed must be an unsigned 64-bit integer, got {seed}")
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def gen_path_power(n: int) -> Graph:
    """Path ``v_0..v_{n-1}`` plus every edge between vertices at distance two (``2n - 3`` edges)."""
    if n < 3:
        raise InputError(f"path power needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)]
    return Graph.from_edges(n, edges)


def path_power_order(n: int) -> list[int]:
    """Outer cycle of `gen_path_power`: even vertices up, odd vertices back down."""
    if n < 3:
        raise InputError(f"path power needs n >= 3, got {n}")
    last_odd = n - 1 if n % 2 == 0 else n - 2
    return [*range(0, n, 2), *range(last_odd, 0, -2)]


def gen_cycle_power(n: int) -> Graph:
    """Cycle plus every edge between vertices at distance two.

    Deleting the wrap-around edges ``(n-1, 0)``, ``(n-2, 0)`` and ``(n-1, 1)`` gives `gen_path_power`.
    """
    if n < 5:
        raise InputError(f"cycle power needs n >= 5, got {n}")
    edges = {tuple(sorted((i, (i + k) % n))) for i in range(n) for k in (1, 2)}
    return Graph.from_edges(n, sorted(edges))


def gen_planar_gadget(p: int, q: int) -> Graph:
    """Apex, ``p`` branch vertices with ``q`` private leaves each, and a collector on all leaves.

    Labels: apex ``0``; branch ``i`` (1-based) is ``i``; leaf ``j`` of branch ``i`` is
    ``p + (i - 1) * q + j``; the collector is ``p + p * q + 1``.
    """
    if p < 1 or q < 1:
        raise InputError(f"planar gadget needs p >= 1 and q >= 1, got p={p}, q={q}")
    collector = p + p * q + 1
    edges = []
    for i in range(1, p + 1):
        edges.append((0, i))
        for j in range(1, q + 1):
            leaf = p + (i - 1) * q + j
            edges.append((i, leaf))
            edges.append((leaf, collector))
    return Graph.from_edges(collector + 1, edges)


def _random_dyck(k: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform Dyck word of semilength ``k`` (``+1``/``-1`` steps) by the cycle lemma."""
    steps = rng.permutation(np.array([1] * k + [-1] * (k + 1), dtype=np.int64))
    cut = int(np.argmin(np.cumsum(steps))) + 1
    return np.concatenate((steps[cut:], steps[:cut]))[:-1]


def _triangulation_from_dyck(word: np.ndarray, n: int) -> Graph:
    """Polygon triangulation of the binary tree encoded by ``word`` (one tree node per triangle)."""
    match = [0] * len(word)
    opened: list[int] = []
    for i, step in enumerate(word):
        if step > 0:
            opened.append(i)
        else:
            match[opened.pop()] = i
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    pending = [(0, n - 1, 0, len(word))]
    while pending:
        i, j, start, end = pending.pop()
        if start == end:
            continue
        close = match[start]
        k = i + (close - start - 1) // 2 + 1
        edges.update({(i, k), (k, j)})
        pending.append((i, k, start + 1, close))
        pending.append((k, j, close + 1, end))
    return Graph.from_edges(n, sorted(edges))


def _random_triangulation(n: int, rng: np.random.Generator) -> Graph:
    if n < 3:
        raise InputError(f"maximal outerplanar graphs need n >= 3, got {n}")
    return _triangulation_from_dyck(_random_dyck(n - 2, rng), n)


def gen_random_maximal_outerplanar(n: int, seed: int) -> Graph:
    """Uniformly random triangulation of the convex polygon ``0..n-1``."""
    return _random_triangulation(n, make_rng(seed))


def gen_random_outerplanar(n: int, keep_prob: float, seed: int) -> Graph:
    """Random maximal outerplanar graph with each edge kept independently with probability ``keep_prob``."""
    if not 0.0 <= keep_prob <= 1.0:
        raise InputError(f"keep_prob must lie in [0, 1], got {keep_prob}")
    rng = make_rng(seed)
    full = _random_triangulation(n, rng)
    edges = list(full.edges())
    keep = rng.random(len(edges)) < keep_prob
    return Graph.from_edges(n, (e for e, kept in zip(edges, keep) if kept))


def enumerate_triangulations(n: int) -> Iterator[Graph]:
    """All ``Catalan(n - 2)`` triangulations of the convex polygon ``0..n-1``."""
    if n < 3:
        raise InputError(f"triangulations need n >= 3, got {n}")

    def chords(i: int, j: int) -> Iterator[frozenset[tuple[int, int]]]:
        if j - i < 2:
            yield frozenset()
            return
        for k in range(i + 1, j):
            own = {e for e in ((i, k), (k, j)) if e[1] - e[0] > 1}
            for left in chords(i, k):
                for right in chords(k, j):
                    yield left | right | own

    sides = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    for inner in chords(0, n - 1):
        yield Graph.from_edges(n, sorted(set(sides) | inner))


GENERATORS: dict[str, Callable[..., Graph]] = {
    "path-power": gen_path_power,
    "cycle-power": gen_cycle_power,
    "planar-gadget": gen_planar_gadget,
    "random-mop": gen_random_maximal_outerplanar,
    "random-op": gen_random_outerplanar,
}
