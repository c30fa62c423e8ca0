"""Outerplanarity recognition with embeddings and forbidden-minor certificates.

Every block is reduced by eliminating degree-2 vertices (adding the edge between the two neighbors
when it is missing) until a triangle remains; reinserting the eliminated vertices between their two
neighbors rebuilds the block's outer cycle. Block cycles are spliced at cut vertices into one circular
order per component, and components are concatenated by smallest vertex.
"""

from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass

from outerdom.graphs.blocks import biconnected_components
from outerdom.graphs.core import Graph, VertexSet
from outerdom.graphs.minors import K4, K23, MINOR_SEARCH_LIMIT, MinorModel, find_minor
from outerdom.utils.log import logger


@dataclass(frozen=True)
class OuterplanarWitness:
    verdict: bool
    embedding: tuple[int, ...] | None = None
    """Circular vertex order with pairwise non-crossing chords (only when ``verdict`` is true)."""
    forbidden: MinorModel | None = None
    """K4 or K23 branch sets (only when ``verdict`` is false and the offending block is small enough)."""

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "embedding": list(self.embedding) if self.embedding is not None else None,
            "forbidden": self.forbidden.to_dict() if self.forbidden is not None else None,
        }


def is_noncrossing(g: Graph, order: Sequence[int]) -> bool:
    """True iff ``order`` is a permutation of the vertices and no two edges interleave on the circle."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    intervals = sorted(
        ((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges()),
        key=lambda iv: (iv[0], -iv[1]),
    )
    open_rights: list[int] = []
    for left, right in intervals:
        while open_rights and open_rights[-1] <= left:
            open_rights.pop()
        if open_rights and open_rights[-1] < right:
            return False
        open_rights.append(right)
    return True


def _block_cycle(g: Graph, block: VertexSet) -> list[int] | None:
    """Outer cycle of a block, or None if the block is not outerplanar."""
    vertices = block.to_list()
    if len(vertices) <= 2:
        return vertices
    adj = {v: {u for u in g.adj[v] if u in block} for v in vertices}
    if sum(map(len, adj.values())) // 2 > 2 * len(vertices) - 3:
        return None
    candidates = [v for v in vertices if len(adj[v]) == 2]
    eliminated: list[tuple[int, int, int]] = []
    while len(adj) > 3:
        while candidates and (candidates[-1] not in adj or len(adj[candidates[-1]]) != 2):
            candidates.pop()
        if not candidates:
            return None
        v = candidates.pop()
        u, w = sorted(adj.pop(v))
        adj[u].discard(v)
        adj[w].discard(v)
        if w in adj[u]:
            candidates.extend(x for x in (u, w) if len(adj[x]) == 2)
        else:
            adj[u].add(w)
            adj[w].add(u)
        eliminated.append((v, u, w))
    if any(len(nbrs) != 2 for nbrs in adj.values()):
        return None
    a, b, c = sorted(adj)
    successor = {a: b, b: c, c: a}
    for v, u, w in reversed(eliminated):
        if successor[u] == w:
            successor[u], successor[v] = v, w
        elif successor[w] == u:
            successor[w], successor[v] = v, u
        else:
            return None
    cycle = [vertices[0]]
    while len(cycle) < len(vertices):
        cycle.append(successor[cycle[-1]])
    sub, originals = g.induced(vertices)
    index = {v: i for i, v in enumerate(originals)}
    if not is_noncrossing(sub, [index[v] for v in cycle]):
        return None
    return cycle


def _component_order(root: int, cycles: list[list[int]], blocks_of: dict[int, list[int]]) -> list[int]:
    order = [root]
    queued = set(blocks_of[root])
    # each frame holds pending (block, entry) pairs or vertices still to emit
    stack: list[list[tuple[str, int, int]]] = [[("block", b, root) for b in reversed(blocks_of[root])]]
    while stack:
        frame = stack[-1]
        if not frame:
            stack.pop()
            continue
        kind, item, entry = frame.pop()
        if kind == "block":
            cycle = cycles[item]
            i = cycle.index(entry)
            rotated = cycle[i + 1 :] + cycle[:i]
            stack.append([("vertex", x, item) for x in reversed(rotated)])
            continue
        order.append(item)
        children = [b for b in blocks_of[item] if b not in queued]
        queued.update(children)
        if children:
            stack.append([("block", b, item) for b in reversed(children)])
    return order


def outer_order(g: Graph) -> tuple[int, ...] | None:
    """A non-crossing circular order of all vertices, or None if ``g`` is not outerplanar."""
    return is_outerplanar(g, certify=False).embedding


def is_outerplanar(g: Graph, *, certify: bool = True) -> OuterplanarWitness:
    blocks = biconnected_components(g)
    cycles: list[list[int]] = []
    for block in blocks:
        cycle = _block_cycle(g, block)
        if cycle is None:
            logger.debug(f"block {block.to_list()} is not outerplanar")
            return OuterplanarWitness(False, forbidden=_certificate(g, block) if certify else None)
        cycles.append(cycle)
    blocks_of: dict[int, list[int]] = defaultdict(list)
    for i, block in enumerate(blocks):
        for v in block:
            blocks_of[v].append(i)
    order: list[int] = []
    for comp in g.components():
        order.extend(_component_order(comp[0], cycles, blocks_of))
    if not is_noncrossing(g, order):
        logger.error(f"spliced block cycles do not form a non-crossing order: {order}")
        return OuterplanarWitness(False)
    return OuterplanarWitness(True, embedding=tuple(order))


def _certificate(g: Graph, block: VertexSet) -> MinorModel | None:
    if len(block) > MINOR_SEARCH_LIMIT:
        return None
    sub, originals = g.induced(block)
    for pattern in (K4, K23):
        model = find_minor(sub, pattern)
        if model is not None:
            return MinorModel(
                model.pattern,
                tuple(VertexSet.of(g.n, (originals[i] for i in branch)) for branch in model.branch_sets),
            )
    logger.warning(f"no forbidden minor found in non-outerplanar block {block.to_list()}")
    return None
