"""Exhaustive enumeration of connected outerplanar graphs up to isomorphism.

Every edge subset of a polygon triangulation is a non-crossing graph on the polygon's corners,
and every non-crossing graph extends to a triangulation, so the union over triangulations of
their edge subsets is exactly the set of non-crossing graphs. They are generated directly (chord
sets by backtracking, polygon sides freely), which visits each labeled graph once instead of once
per triangulation containing it.
"""

from collections.abc import Iterator

from outerdom.exceptions import CapabilityError
from outerdom.graphs.canonical import canonical_code_of_masks, graph_from_code
from outerdom.graphs.core import Graph
from outerdom.utils.log import logger

ENUMERATION_MIN = 3
ENUMERATION_MAX = 10


def _crosses(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (i, j), (k, l) = a, b
    return i < k < j < l or k < i < l < j


def _chord_sets(n: int) -> Iterator[list[int]]:
    """Neighbor masks of every non-crossing set of chords (non-side pairs) of the ``n``-gon."""
    chords = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]
    crossing = [sum(1 << b for b, other in enumerate(chords) if _crosses(c, other)) for c in chords]
    stack: list[tuple[int, int, tuple[int, ...]]] = [(0, 0, (0,) * n)]
    while stack:
        k, chosen, masks = stack.pop()
        if k == len(chords):
            yield list(masks)
            continue
        stack.append((k + 1, chosen, masks))
        if not chosen & crossing[k]:
            u, v = chords[k]
            extended = list(masks)
            extended[u] |= 1 << v
            extended[v] |= 1 << u
            stack.append((k + 1, chosen | 1 << k, tuple(extended)))


def _is_lex_max_rotation(degrees: list[int]) -> bool:
    """Whether the circular degree sequence is maximal among its rotations and reflections."""
    n = len(degrees)
    seq = tuple(degrees)
    doubled = degrees + degrees
    reverse = degrees[::-1] * 2
    for i in range(n):
        if i and tuple(doubled[i : i + n]) > seq:
            return False
        if tuple(reverse[i : i + n]) > seq:
            return False
    return True


def noncrossing_connected_masks(n: int) -> Iterator[list[int]]:
    """Neighbor masks of connected non-crossing graphs on the ``n``-gon, one or more per class.

    Graphs whose circular degree sequence is not lexicographically maximal among its rotations and
    reflections are skipped: some rotation or reflection of the same graph is also non-crossing
    and passes, so every isomorphism class keeps a representative.
    """
    full = (1 << n) - 1
    sides = [(i, (i + 1) % n) for i in range(n)]
    for chord_masks in _chord_sets(n):
        for subset in range(1 << n):
            masks = list(chord_masks)
            for s in range(n):
                if subset >> s & 1:
                    u, v = sides[s]
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
            if not all(masks):
                continue
            if not _is_lex_max_rotation([m.bit_count() for m in masks]):
                continue
            seen = frontier = 1
            while frontier:
                nxt = 0
                for v in range(n):
                    if frontier >> v & 1:
                        nxt |= masks[v]
                frontier = nxt & ~seen
                seen |= frontier
            if seen == full:
                yield masks


def enumerate_connected_outerplanar(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected outerplanar graphs on ``n`` vertices.

    Representatives are yielded in increasing canonical-code order.
    """
    if not ENUMERATION_MIN <= n <= ENUMERATION_MAX:
        raise CapabilityError(
            f"enumeration supports {ENUMERATION_MIN} <= n <= {ENUMERATION_MAX}, got n={n}"
        )
    codes: set[bytes] = set()
    labeled = 0
    for masks in noncrossing_connected_masks(n):
        labeled += 1
        codes.add(canonical_code_of_masks(masks))
    logger.debug(f"n={n}: {labeled} labeled candidates, {len(codes)} isomorphism classes")
    for code in sorted(codes):
        yield graph_from_code(code)


def enumerate_corpus(n_max: int, n_min: int = ENUMERATION_MIN) -> Iterator[Graph]:
    """Connected outerplanar graphs for every ``n_min <= n <= n_max``, ordered by ``n`` then code."""
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected_outerplanar(n)
