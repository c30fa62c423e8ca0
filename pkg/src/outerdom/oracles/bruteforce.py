"""Exact minimum dominating set by iterative deepening over the solution size.

The feasibility test branches on the lowest undominated vertex (some member of its closed
neighborhood must be chosen) and prunes with ``ceil(undominated / (max_degree + 1))``.
"""

from dataclasses import dataclass

from outerdom.exceptions import CapabilityError
from outerdom.graphs.core import Graph, VertexSet, _bits
from outerdom.oracles.domination import MdsMethod, MdsResult

BRUTEFORCE_LIMIT = 24


@dataclass
class BruteForceConfig:
    max_vertices: int = BRUTEFORCE_LIMIT
    max_size: int | None = None
    """Bound on the answer; when set, graphs above ``max_vertices`` are searched up to this size only."""


def _feasible(closed: tuple[int, ...], full: int, reach: int, covered: int, allowed: int, budget: int) -> bool:
    undominated = full & ~covered
    if not undominated:
        return True
    if budget == 0 or -(-undominated.bit_count() // reach) > budget:
        return False
    u = (undominated & -undominated).bit_length() - 1
    for v in _bits(closed[u] & allowed):
        if _feasible(closed, full, reach, covered | closed[v], allowed, budget - 1):
            return True
    return False


def _smallest_witness(g: Graph, k: int) -> int:
    """Lexicographically smallest dominating set of size ``k`` (one is known to exist)."""
    closed, full = g.closed_masks, (1 << g.n) - 1
    reach = max(g.degrees, default=0) + 1
    chosen = covered = 0
    last = -1
    for slot in range(k):
        for v in range(last + 1, g.n):
            later = full & ~((1 << (v + 1)) - 1)
            if _feasible(closed, full, reach, covered | closed[v], later, k - slot - 1):
                chosen |= 1 << v
                covered |= closed[v]
                last = v
                break
    return chosen


def exact_mds_bruteforce(g: Graph, *, max_size: int | None = None, max_vertices: int = BRUTEFORCE_LIMIT) -> MdsResult:
    """Minimum dominating set with the lexicographically smallest witness at the winning size.

    Without ``max_size`` the graph must have at most ``max_vertices`` vertices. With ``max_size``
    any graph is accepted and a CapabilityError reports a domination number above the bound.
    """
    if max_size is None and g.n > max_vertices:
        raise CapabilityError(f"brute-force oracle is limited to n <= {max_vertices}, got n={g.n}")
    closed, full = g.closed_masks, (1 << g.n) - 1
    reach = max(g.degrees, default=0) + 1
    limit = g.n if max_size is None else min(max_size, g.n)
    for k in range(limit + 1):
        if _feasible(closed, full, reach, 0, full, k):
            return MdsResult(k, VertexSet(g.n, _smallest_witness(g, k)), MdsMethod.BRUTEFORCE)
    raise CapabilityError(f"domination number exceeds the search bound {max_size}")


class BruteForceOracle:
    def __init__(self, *, config_class: type = BruteForceConfig, **kwargs):
        self.config = config_class(**kwargs)

    def solve(self, g: Graph) -> MdsResult:
        return exact_mds_bruteforce(g, max_size=self.config.max_size, max_vertices=self.config.max_vertices)
