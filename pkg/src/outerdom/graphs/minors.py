"""Exhaustive K4 / K23 minor search with branch-set certificates.

Both patterns are 2-connected with minimum degree 2, so a model lives inside one block and never
uses a vertex of degree at most one. Each block is searched over all sequences of edge contractions;
a contracted graph that contains the pattern as a subgraph yields the branch sets, and contracted
graphs already known to be minor-free are skipped by canonical code.
"""

from dataclasses import dataclass

from outerdom.exceptions import CapabilityError, InputError
from outerdom.graphs.blocks import biconnected_components
from outerdom.graphs.canonical import canonical_code, canonical_code_of_masks
from outerdom.graphs.core import Graph, VertexSet, _bits
from outerdom.utils.log import logger

MINOR_SEARCH_LIMIT = 12

K4 = Graph.complete(4)
K23 = Graph.complete_bipartite(2, 3)
"""Vertices 0 and 1 are the hubs, 2..4 the three independent vertices."""

PATTERNS = {"K4": K4, "K23": K23}


@dataclass(frozen=True)
class MinorModel:
    """Branch sets realizing ``pattern``; ``branch_sets[h]`` is the set for pattern vertex ``h``."""

    pattern: str
    branch_sets: tuple[VertexSet, ...]

    def to_dict(self) -> dict:
        return {"pattern": self.pattern, "branch_sets": [b.to_list() for b in self.branch_sets]}


def pattern_name(pattern: Graph) -> str:
    code = canonical_code(pattern)
    for name, candidate in PATTERNS.items():
        if canonical_code(candidate) == code:
            return name
    raise InputError("minor search supports only the patterns K4 and K23")


def _find_subgraph(adj: dict[int, set[int]], name: str) -> list[int] | None:
    labels = sorted(adj)
    if name == "K4":
        for a in labels:
            for b in sorted(adj[a]):
                if b < a:
                    continue
                common = sorted(adj[a] & adj[b])
                for i, c in enumerate(common):
                    for d in common[i + 1 :]:
                        if d in adj[c]:
                            return [a, b, c, d]
        return None
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            common = sorted(adj[a] & adj[b])
            if len(common) >= 3:
                return [a, b, *common[:3]]
    return None


def _prune(adj: dict[int, set[int]]) -> None:
    low = [v for v, nbrs in adj.items() if len(nbrs) <= 1]
    while low:
        v = low.pop()
        if v not in adj:
            continue
        for u in adj.pop(v):
            adj[u].discard(v)
            if len(adj[u]) <= 1:
                low.append(u)


def _state_code(adj: dict[int, set[int]]) -> bytes:
    index = {v: i for i, v in enumerate(sorted(adj))}
    return canonical_code_of_masks([sum(1 << index[u] for u in adj[v]) for v in sorted(adj)])


def _search(
    adj: dict[int, set[int]], branches: dict[int, int], name: str, seen: set[bytes]
) -> list[int] | None:
    pattern = PATTERNS[name]
    hit = _find_subgraph(adj, name)
    if hit is not None:
        return [branches[label] for label in hit]
    if len(adj) <= pattern.n or sum(map(len, adj.values())) // 2 < pattern.m:
        return None
    edges = sorted((u, v) for u in adj for v in adj[u] if u < v)
    for u, v in edges:
        merged = {w: set(nbrs) for w, nbrs in adj.items()}
        for w in merged.pop(v):
            merged[w].discard(v)
            if w != u:
                merged[w].add(u)
                merged[u].add(w)
        merged_branches = dict(branches)
        merged_branches[u] |= merged_branches.pop(v)
        _prune(merged)
        if len(merged) < pattern.n:
            continue
        code = _state_code(merged)
        if code in seen:
            continue
        seen.add(code)
        found = _search(merged, merged_branches, name, seen)
        if found is not None:
            return found
    return None


def find_minor(g: Graph, pattern: Graph) -> MinorModel | None:
    """Branch sets of a ``pattern`` minor of ``g``, or None if ``g`` has no such minor."""
    name = pattern_name(pattern)
    if g.n > MINOR_SEARCH_LIMIT:
        raise CapabilityError(
            f"exhaustive minor search is limited to n <= {MINOR_SEARCH_LIMIT}, got n={g.n}; use is_outerplanar"
        )
    for block in biconnected_components(g):
        if len(block) < PATTERNS[name].n:
            continue
        sub, originals = g.induced(block)
        adj = {v: set(nbrs) for v, nbrs in enumerate(sub.adj)}
        _prune(adj)
        found = _search(adj, {v: 1 << v for v in adj}, name, {_state_code(adj)})
        if found is not None:
            logger.debug(f"found {name} minor in block {block.to_list()}")
            return MinorModel(
                name, tuple(VertexSet.of(g.n, (originals[i] for i in _bits(mask))) for mask in found)
            )
    return None


def has_minor(g: Graph, pattern: Graph) -> bool:
    return find_minor(g, pattern) is not None


def model_quotient(g: Graph, model: MinorModel) -> Graph:
    """Contract every branch set and drop all other vertices."""
    k = len(model.branch_sets)
    edges = []
    for i in range(k):
        reach = 0
        for v in model.branch_sets[i]:
            reach |= g.masks[v]
        edges.extend((i, j) for j in range(i + 1, k) if reach & model.branch_sets[j].mask)
    return Graph.from_edges(k, edges)


def is_valid_model(g: Graph, model: MinorModel) -> bool:
    """Branch sets are nonempty, disjoint and connected, and every pattern edge is realized."""
    pattern = PATTERNS[model.pattern]
    if len(model.branch_sets) != pattern.n:
        return False
    union = 0
    for branch in model.branch_sets:
        if not g.induces_connected(branch.mask) or union & branch.mask:
            return False
        union |= branch.mask
    quotient = model_quotient(g, model)
    return all(quotient.has_edge(u, v) for u, v in pattern.edges())
