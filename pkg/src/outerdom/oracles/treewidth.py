"""Exact minimum dominating set on outerplanar graphs by dynamic programming over width-2 bags.

Each component is completed along its circular order (polygon sides plus the existing chords) and
then triangulated by repeatedly cutting off a degree-2 ear. The ear triangles are the bags; a bag's
parent is the bag of whichever ear neighbor is cut off first, the last triangle is the root.

Per-vertex states: IN (chosen), DOM (not chosen, dominated by something already seen) and WAIT
(not chosen, must be dominated later). A vertex may only be forgotten as IN or DOM.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from outerdom.exceptions import InputError
from outerdom.graphs.core import Graph, VertexSet
from outerdom.oracles.domination import MdsMethod, MdsResult
from outerdom.outerplanar.recognition import is_noncrossing, is_outerplanar
from outerdom.utils.log import logger

IN, DOM, WAIT = 0, 1, 2

Table = dict[tuple[int, ...], tuple[int, Any]]
"""Bag-state assignment (aligned with the sorted bag) -> (cost, witness rope)."""


@dataclass
class TreewidthConfig:
    verify_embedding: bool = True


@dataclass(frozen=True)
class EarDecomposition:
    bags: tuple[tuple[int, ...], ...]
    """Sorted vertex tuples of size at most 3; children always precede their parent."""
    parent: tuple[int, ...]
    """Index of the parent bag, ``-1`` for the root (the last bag)."""


def ear_decomposition(g: Graph, cyclic: Sequence[int]) -> EarDecomposition:
    """Width-2 tree decomposition of the connected vertex set listed in circular order ``cyclic``."""
    if len(cyclic) <= 3:
        return EarDecomposition((tuple(sorted(cyclic)),), (-1,))
    members = set(cyclic)
    adj = {v: {u for u in g.adj[v] if u in members} for v in cyclic}
    for a, b in zip(cyclic, [*cyclic[1:], cyclic[0]]):
        adj[a].add(b)
        adj[b].add(a)
    candidates = [v for v in cyclic if len(adj[v]) == 2]
    bags: list[tuple[int, ...]] = []
    ears: list[tuple[int, int, int]] = []
    while len(adj) > 3:
        while candidates[-1] not in adj or len(adj[candidates[-1]]) != 2:
            candidates.pop()
        v = candidates.pop()
        u, w = sorted(adj.pop(v))
        adj[u].discard(v)
        adj[w].discard(v)
        if w in adj[u]:
            candidates.extend(x for x in (u, w) if len(adj[x]) == 2)
        else:
            adj[u].add(w)
            adj[w].add(u)
        ears.append((v, u, w))
        bags.append(tuple(sorted((v, u, w))))
    bags.append(tuple(sorted(adj)))
    root = len(bags) - 1
    bag_of = {v: i for i, (v, _, _) in enumerate(ears)}
    parent = []
    for v, u, w in ears:
        later = [bag_of[x] for x in (u, w) if x in bag_of]
        parent.append(min(later) if later else root)
    parent.append(-1)
    return EarDecomposition(tuple(bags), tuple(parent))


def _introduce(g: Graph, table: Table, bag: tuple[int, ...], v: int) -> tuple[Table, tuple[int, ...]]:
    new_bag = tuple(sorted((*bag, v)))
    at = new_bag.index(v)
    nbr_positions = [i for i, u in enumerate(bag) if g.has_edge(u, v)]
    result: Table = {}

    def offer(key: tuple[int, ...], cost: int, rope: Any) -> None:
        if key not in result or cost < result[key][0]:
            result[key] = (cost, rope)

    for states, (cost, rope) in table.items():
        chosen = list(states)
        for i in nbr_positions:
            if chosen[i] == WAIT:
                chosen[i] = DOM
        offer(tuple(chosen[:at] + [IN] + chosen[at:]), cost + 1, ("in", v, rope))
        mine = DOM if any(states[i] == IN for i in nbr_positions) else WAIT
        offer(tuple(states[:at] + (mine,) + states[at:]), cost, rope)
    return result, new_bag


def _forget(table: Table, bag: tuple[int, ...], v: int) -> tuple[Table, tuple[int, ...]]:
    at = bag.index(v)
    result: Table = {}
    for states, (cost, rope) in table.items():
        if states[at] == WAIT:
            continue
        key = states[:at] + states[at + 1 :]
        if key not in result or cost < result[key][0]:
            result[key] = (cost, rope)
    return result, bag[:at] + bag[at + 1 :]


def _join(left: Table, right: Table) -> Table:
    result: Table = {}
    for a, (cost_a, rope_a) in left.items():
        for b, (cost_b, rope_b) in right.items():
            if any((x == IN) != (y == IN) for x, y in zip(a, b)):
                continue
            key = tuple(IN if x == IN else DOM if DOM in (x, y) else WAIT for x, y in zip(a, b))
            cost = cost_a + cost_b - a.count(IN)
            if key not in result or cost < result[key][0]:
                result[key] = (cost, ("join", rope_a, rope_b))
    return result


def _move(g: Graph, table: Table, bag: tuple[int, ...], target: tuple[int, ...]) -> Table:
    for v in [x for x in bag if x not in target]:
        table, bag = _forget(table, bag, v)
    for v in [x for x in target if x not in bag]:
        table, bag = _introduce(g, table, bag, v)
    return table


def _flatten(rope: Any) -> set[int]:
    members: set[int] = set()
    pending = [rope]
    while pending:
        node = pending.pop()
        if node is None:
            continue
        if node[0] == "in":
            members.add(node[1])
            pending.append(node[2])
        else:
            pending.extend(node[1:])
    return members


def _solve_component(g: Graph, cyclic: Sequence[int]) -> tuple[int, set[int]]:
    decomposition = ear_decomposition(g, cyclic)
    tables: list[Table | None] = [None] * len(decomposition.bags)
    for i, bag in enumerate(decomposition.bags):
        table = tables[i] if tables[i] is not None else _move(g, {(): (0, None)}, (), bag)
        p = decomposition.parent[i]
        if p < 0:
            final = _move(g, table, bag, ())
            cost, rope = final[()]
            return cost, _flatten(rope)
        moved = _move(g, table, bag, decomposition.bags[p])
        tables[p] = moved if tables[p] is None else _join(tables[p], moved)
    raise AssertionError("ear decomposition has no root bag")


def exact_mds_treewidth(g: Graph, witness_embedding: Sequence[int] | None = None, *, verify: bool = True) -> MdsResult:
    """Exact domination number of an outerplanar graph in time linear in ``n``."""
    if witness_embedding is None:
        witness = is_outerplanar(g, certify=False)
        if not witness.verdict:
            raise InputError("treewidth DP requires an outerplanar graph")
        witness_embedding = witness.embedding
    elif verify and not is_noncrossing(g, witness_embedding):
        raise InputError("supplied embedding is not a non-crossing circular order of the graph")
    component_of = {}
    for i, comp in enumerate(g.components()):
        for v in comp:
            component_of[v] = i
    orders: dict[int, list[int]] = {}
    for v in witness_embedding:
        orders.setdefault(component_of[v], []).append(v)
    total, members = 0, set()
    for cyclic in orders.values():
        cost, chosen = _solve_component(g, cyclic)
        total += cost
        members |= chosen
    logger.debug(f"treewidth DP: n={g.n}, {len(orders)} components, gamma={total}")
    return MdsResult(total, VertexSet.of(g.n, members), MdsMethod.TREEWIDTH_DP)


class TreewidthOracle:
    def __init__(self, *, config_class: type = TreewidthConfig, **kwargs):
        self.config = config_class(**kwargs)

    def solve(self, g: Graph, witness_embedding: Sequence[int] | None = None) -> MdsResult:
        return exact_mds_treewidth(g, witness_embedding, verify=self.config.verify_embedding)
