"""The contraction multigraph ``H_G(S)``.

Every vertex outside ``S`` is merged into one chosen ``S``-neighbor. Edges whose endpoints land in
the same class disappear; all other edges survive, so parallel edges are kept.
"""

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType

from outerdom.exceptions import InputError
from outerdom.graphs.core import Graph, Multigraph, VertexSet
from outerdom.outerplanar.generators import make_rng


class TieBreak(str, Enum):
    SMALLEST = "smallest"
    RANDOM = "random"


@dataclass(frozen=True)
class HGraph:
    s: VertexSet
    base: Multigraph
    """Multigraph over the original vertex labels; only members of ``s`` carry edges."""
    assignment: Mapping[int, int]
    """``u -> s(u)`` for every vertex outside ``s``."""

    def to_dict(self) -> dict:
        return {
            "s": self.s.to_list(),
            "edges": [[u, v, k] for (u, v), k in self.base.mult.items()],
            "assignment": {str(u): w for u, w in self.assignment.items()},
        }


def build_h_multigraph(
    g: Graph,
    s: VertexSet,
    tie_break: TieBreak | str = TieBreak.SMALLEST,
    *,
    seed: int = 0,
    overrides: Mapping[int, int] | None = None,
) -> HGraph:
    """Contract every non-member into an ``S``-neighbor.

    ``overrides`` pins ``s(u)`` for selected vertices; the remaining choices follow ``tie_break``
    (smallest ``S``-neighbor, or a uniformly random one drawn from ``seed``).
    """
    if s.n != g.n:
        raise InputError(f"vertex set over {s.n} vertices used with a graph on {g.n}")
    tie_break = TieBreak(tie_break)
    overrides = dict(overrides or {})
    rng = make_rng(seed) if tie_break == TieBreak.RANDOM else None
    assignment: dict[int, int] = {}
    for u in range(g.n):
        if u in s:
            if u in overrides:
                raise InputError(f"vertex {u} belongs to S and cannot be assigned")
            continue
        candidates = [w for w in g.adj[u] if w in s]
        if not candidates:
            raise InputError(f"vertex {u} has no neighbor in {s.to_list()}; the set is not dominating")
        if u in overrides:
            if overrides[u] not in candidates:
                raise InputError(f"s({u}) = {overrides[u]} is not an S-neighbor of {u}")
            assignment[u] = overrides[u]
        elif rng is not None:
            assignment[u] = candidates[int(rng.integers(len(candidates)))]
        else:
            assignment[u] = candidates[0]
    unknown = set(overrides) - set(range(g.n))
    if unknown:
        raise InputError(f"overrides name vertices outside the graph: {sorted(unknown)}")
    image = [assignment.get(v, v) for v in range(g.n)]
    mult = Counter(tuple(sorted((image[u], image[v]))) for u, v in g.edges() if image[u] != image[v])
    return HGraph(s=s, base=Multigraph(g.n, dict(mult)), assignment=MappingProxyType(assignment))


def is_valid_h(g: Graph, h: HGraph) -> bool:
    """Every assignment goes to an ``S``-neighbor and every base edge lifts to an edge of ``g``."""
    for u, w in h.assignment.items():
        if w not in h.s or not g.has_edge(u, w):
            return False
    lifted: Counter = Counter()
    for u, v in g.edges():
        a, b = h.assignment.get(u, u), h.assignment.get(v, v)
        if a != b:
            lifted[tuple(sorted((a, b)))] += 1
    return all(u in h.s and v in h.s for u, v in h.base.mult) and lifted == Counter(dict(h.base.mult))
