"""Exhaustive check of ``constant * |S| >= |B| + |D|`` over enumerated outerplanar graphs."""

import concurrent.futures
from collections.abc import Callable
from dataclasses import dataclass

from outerdom.analysis.partition import partition_wrt, v4plus_mask, vstar_mask
from outerdom.exceptions import CapabilityError
from outerdom.graphs.canonical import canonical_code
from outerdom.graphs.core import Graph, VertexSet
from outerdom.oracles.domination import enumerate_dominating_sets, enumerate_minimal_dominating_sets
from outerdom.outerplanar.enumeration import ENUMERATION_MAX, ENUMERATION_MIN, enumerate_connected_outerplanar
from outerdom.utils.log import logger

LEMMA21_CONSTANT = 4
ALL_SETS_MAX = 7


def lemma21_check(g: Graph, s: VertexSet, constant: int = LEMMA21_CONSTANT) -> bool:
    part = partition_wrt(g, s)
    return constant * len(s) >= len(part.b) + len(part.d)


@dataclass(frozen=True)
class Counterexample:
    graph: Graph
    s: VertexSet
    constant: int

    def to_dict(self) -> dict:
        part = partition_wrt(self.graph, self.s)
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "code": canonical_code(self.graph).hex(),
            "set": self.s.to_list(),
            "constant": self.constant,
            "b": part.b.to_list(),
            "d": part.d.to_list(),
        }


def _first_violation(g: Graph, constant: int, all_sets: bool) -> VertexSet | None:
    high, low = v4plus_mask(g), vstar_mask(g)
    sets = enumerate_dominating_sets(g) if all_sets else enumerate_minimal_dominating_sets(g)
    for s in sets:
        if constant * len(s) < (high & ~s.mask).bit_count() + (low & ~s.mask).bit_count():
            return s
    return None


def counterexample_search(
    n_max: int,
    *,
    constant: int = LEMMA21_CONSTANT,
    all_sets: bool = False,
    threads: int = 1,
    n_min: int = ENUMERATION_MIN,
    on_graph: Callable[[Graph], None] | None = None,
) -> Counterexample | None:
    """First ``(g, S)`` with ``constant * |S| < |B| + |D|`` in (n, canonical code, set bits) order.

    Only inclusion-minimal dominating sets need checking: adding a vertex to ``S`` raises ``|S|``
    by one and can only shrink ``B`` and ``D``, which are taken outside ``S``. So every violating
    set contains a violating minimal one. ``all_sets`` checks every dominating set instead.
    """
    if not ENUMERATION_MIN <= n_max <= ENUMERATION_MAX:
        raise CapabilityError(f"search supports {ENUMERATION_MIN} <= n_max <= {ENUMERATION_MAX}, got {n_max}")
    if all_sets and n_max > ALL_SETS_MAX:
        raise CapabilityError(f"checking every dominating set is limited to n_max <= {ALL_SETS_MAX}")

    def shard(g: Graph) -> VertexSet | None:
        violation = _first_violation(g, constant, all_sets)
        if on_graph is not None:
            on_graph(g)
        return violation

    checked = 0
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        for n in range(n_min, n_max + 1):
            graphs = list(enumerate_connected_outerplanar(n))
            for g, violation in zip(graphs, executor.map(shard, graphs)):
                checked += 1
                if violation is not None:
                    logger.info(f"violation of {constant}|S| >= |B|+|D| on n={g.n}: S={violation.to_list()}")
                    executor.shutdown(wait=False, cancel_futures=True)
                    return Counterexample(g, violation, constant)
    logger.debug(f"checked {checked} graphs up to n={n_max}, no violation")
    return None
