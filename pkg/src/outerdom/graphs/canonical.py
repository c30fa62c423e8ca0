"""Canonical codes for small graphs.

The code is the minimum upper-triangle adjacency string over all vertex orders that survive
color refinement and individualization. Interchangeable twins are branched on only once.
"""

from collections.abc import Sequence

from outerdom.exceptions import CapabilityError
from outerdom.graphs.core import Graph, _bits

CANONICAL_LIMIT = 16


def _refine(cells: list[int], masks: Sequence[int]) -> list[int]:
    while True:
        refined: list[int] = []
        changed = False
        for cell in cells:
            if not cell & (cell - 1):
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in _bits(cell):
                signature = tuple((masks[v] & c).bit_count() for c in cells)
                groups[signature] = groups.get(signature, 0) | 1 << v
            changed |= len(groups) > 1
            refined.extend(groups[s] for s in sorted(groups))
        cells = refined
        if not changed:
            return cells


def _order_code(order: Sequence[int], masks: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        row = masks[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> order[j] & 1)
    return code


def _canonical(masks: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    n = len(masks)
    best: list = [None, ()]

    def search(cells: list[int]) -> None:
        cells = _refine(cells, masks)
        target = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if target is None:
            order = tuple(c.bit_length() - 1 for c in cells)
            code = _order_code(order, masks)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in _bits(cell):
            if any(masks[u] & ~(1 << v) == masks[v] & ~(1 << u) for u in tried):
                continue
            tried.append(v)
            search(cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :])

    search([(1 << n) - 1] if n else [])
    return (best[0] or 0), best[1]


def _encode(n: int, code: int) -> bytes:
    width = (n * (n - 1) // 2 + 7) // 8
    return bytes([n]) + code.to_bytes(width, "big")


def canonical_form(g: Graph) -> tuple[bytes, tuple[int, ...]]:
    """Canonical code plus the vertex order realizing it (``order[i]`` goes to position ``i``)."""
    if g.n > CANONICAL_LIMIT:
        raise CapabilityError(f"canonical codes are limited to n <= {CANONICAL_LIMIT}, got n={g.n}")
    code, order = _canonical(g.masks)
    return _encode(g.n, code), order


def canonical_code(g: Graph) -> bytes:
    """Equal codes iff the graphs are isomorphic."""
    return canonical_form(g)[0]


def canonical_code_of_masks(masks: Sequence[int]) -> bytes:
    """Same as `canonical_code` for a graph given directly as neighbor bitmasks."""
    if len(masks) > CANONICAL_LIMIT:
        raise CapabilityError(f"canonical codes are limited to n <= {CANONICAL_LIMIT}, got n={len(masks)}")
    return _encode(len(masks), _canonical(masks)[0])


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    _, order = canonical_form(g)
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    return g.relabel(position)


def graph_from_code(code: bytes) -> Graph:
    """Decode a canonical code back into its canonical representative."""
    n = code[0]
    bits = int.from_bytes(code[1:], "big")
    total = n * (n - 1) // 2
    edges, k = [], total - 1
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges)
