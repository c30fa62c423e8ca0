"""The (S, A, B, D) decomposition of the vertex set with respect to a dominating set.

``V_4+`` holds the vertices of degree at least 4; ``V*`` the vertices of degree at most 3 whose
neighbors all have degree at most 3. For a dominating set ``S``: ``B = V_4+ \\ S``,
``D = V* \\ S`` and ``A`` is everything else outside ``S``.
"""

from dataclasses import dataclass

from outerdom.graphs.core import Graph, VertexSet
from outerdom.oracles.domination import require_dominating

DEGREE_THRESHOLD = 4


def v4plus_mask(g: Graph, threshold: int = DEGREE_THRESHOLD) -> int:
    mask = 0
    for v, d in enumerate(g.degrees):
        if d >= threshold:
            mask |= 1 << v
    return mask


def vstar_mask(g: Graph, threshold: int = DEGREE_THRESHOLD) -> int:
    high = v4plus_mask(g, threshold)
    mask = 0
    for v, nbrs in enumerate(g.masks):
        if not (high >> v & 1) and not nbrs & high:
            mask |= 1 << v
    return mask


def central_selection(g: Graph, threshold: int = DEGREE_THRESHOLD) -> VertexSet:
    """``V_4+ ∪ V*`` computed with global knowledge of the graph."""
    return VertexSet(g.n, v4plus_mask(g, threshold) | vstar_mask(g, threshold))


@dataclass(frozen=True)
class PartitionReport:
    s: VertexSet
    a: VertexSet
    b: VertexSet
    d: VertexSet
    v4plus: VertexSet
    vstar: VertexSet

    def to_dict(self) -> dict:
        return {name: getattr(self, name).to_list() for name in ("s", "a", "b", "d", "v4plus", "vstar")}


def partition_wrt(g: Graph, s: VertexSet) -> PartitionReport:
    require_dominating(g, s)
    v4plus = VertexSet(g.n, v4plus_mask(g))
    vstar = VertexSet(g.n, vstar_mask(g))
    b = v4plus - s
    d = vstar - s
    a = s.complement() - b - d
    return PartitionReport(s=s, a=a, b=b, d=d, v4plus=v4plus, vstar=vstar)
