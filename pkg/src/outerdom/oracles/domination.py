"""Domination checks, exact-result type and minimal dominating set enumeration."""

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum

from outerdom.exceptions import CapabilityError, InputError
from outerdom.graphs.core import Graph, VertexSet, _bits

MINIMAL_ENUMERATION_LIMIT = 14


class MdsMethod(str, Enum):
    BRUTEFORCE = "bruteforce"
    TREEWIDTH_DP = "treewidth-dp"


@dataclass(frozen=True)
class MdsResult:
    size: int
    witness: VertexSet
    method: MdsMethod

    def to_dict(self) -> dict:
        return {"size": self.size, "witness": self.witness.to_list(), "method": self.method.value}


def dominated_mask(g: Graph, members: int) -> int:
    """Closed neighborhood ``N[S]`` of the vertex mask ``members``."""
    covered = 0
    closed = g.closed_masks
    for v in _bits(members):
        covered |= closed[v]
    return covered


def is_dominating(g: Graph, s: VertexSet) -> bool:
    if s.n != g.n:
        raise InputError(f"vertex set over {s.n} vertices used with a graph on {g.n}")
    return dominated_mask(g, s.mask) == (1 << g.n) - 1


def require_dominating(g: Graph, s: VertexSet) -> None:
    if not is_dominating(g, s):
        undominated = VertexSet(g.n, ((1 << g.n) - 1) & ~dominated_mask(g, s.mask))
        raise InputError(f"{s.to_list()} does not dominate vertices {undominated.to_list()}")


def _is_minimal(g: Graph, members: int) -> bool:
    """Every member has a private closed neighbor that no other member dominates."""
    closed = g.closed_masks
    for v in _bits(members):
        others = 0
        for u in _bits(members & ~(1 << v)):
            others |= closed[u]
        if not closed[v] & ~others:
            return False
    return True


def enumerate_minimal_dominating_sets(g: Graph) -> Iterator[VertexSet]:
    """Every inclusion-minimal dominating set exactly once, in increasing bitmask order."""
    if g.n > MINIMAL_ENUMERATION_LIMIT:
        raise CapabilityError(
            f"minimal dominating set enumeration is limited to n <= {MINIMAL_ENUMERATION_LIMIT}, got n={g.n}"
        )
    full = (1 << g.n) - 1
    for members in range(1 << g.n):
        if dominated_mask(g, members) == full and _is_minimal(g, members):
            yield VertexSet(g.n, members)


def enumerate_dominating_sets(g: Graph) -> Iterator[VertexSet]:
    """Every dominating set, in increasing bitmask order."""
    if g.n > MINIMAL_ENUMERATION_LIMIT:
        raise CapabilityError(
            f"dominating set enumeration is limited to n <= {MINIMAL_ENUMERATION_LIMIT}, got n={g.n}"
        )
    full = (1 << g.n) - 1
    for members in range(1 << g.n):
        if dominated_mask(g, members) == full:
            yield VertexSet(g.n, members)
