"""Simple graphs, multigraphs and vertex sets.

Vertices are dense integers ``0..n-1``. All types are immutable after construction; neighbor
bitmasks are cached on first use so the exhaustive searches can work on integers.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType

import networkx as nx

from outerdom.exceptions import InputError


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """Bit-set over the vertices ``0..n-1`` of an owning graph."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise InputError(f"vertex set {self.mask:#x} is not a subset of 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def add(self, v: int) -> "VertexSet":
        return VertexSet(self.n, self.mask | 1 << v)

    def remove(self, v: int) -> "VertexSet":
        return VertexSet(self.n, self.mask & ~(1 << v))

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1`` with sorted neighbor tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InputError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if u == v:
                    raise InputError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise InputError(f"neighbor {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise InputError(f"adjacency is not symmetric: {v}->{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and out-of-range endpoints."""
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise InputError(f"a cycle needs at least 3 vertices, got {n}")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open-neighborhood bitmask per vertex."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed-neighborhood bitmask per vertex."""
        return tuple(mask | 1 << v for v, mask in enumerate(self.masks))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.reach(1, (1 << self.n) - 1) == (1 << self.n) - 1

    def reach(self, start: int, within: int) -> int:
        """Vertices of ``within`` reachable from the ``start`` mask inside ``within``."""
        seen = start & within
        frontier = seen
        masks = self.masks
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= masks[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def induces_connected(self, subset: int) -> bool:
        if not subset:
            return False
        return self.reach(subset & -subset, subset) == subset

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        return sorted(sorted(c) for c in nx.connected_components(self.to_networkx()))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabeled to ``0..k-1``; also returns the original label of each new vertex."""
        originals = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(originals)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(originals), edges), originals

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph where vertex ``v`` becomes ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabeling is not a permutation of the vertices")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in edges}
        missing = [e for e in drop if not self.has_edge(*e)]
        if missing:
            raise InputError(f"edges {sorted(missing)} are not in the graph")
        return Graph.from_edges(self.n, (e for e in self.edges() if e not in drop))

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges())
        return h

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> "Graph":
        """Convert a networkx graph whose nodes are ``0..n-1``."""
        n = h.number_of_nodes()
        if set(h.nodes) != set(range(n)):
            raise InputError("networkx graph nodes must be 0..n-1")
        return cls.from_edges(n, ((u, v) for u, v in h.edges() if u != v))


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph without self-loops; ``mult`` maps ``(u, v)`` with ``u < v`` to a multiplicity."""

    n: int
    mult: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (u, v), k in self.mult.items():
            if not u < v:
                raise InputError(f"multigraph pair ({u}, {v}) must be ordered with distinct endpoints")
            if not (0 <= u and v < self.n):
                raise InputError(f"multigraph pair ({u}, {v}) out of range")
            if k < 1:
                raise InputError(f"multiplicity of ({u}, {v}) must be positive, got {k}")
        object.__setattr__(self, "mult", MappingProxyType(dict(sorted(self.mult.items()))))

    @property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self.mult.values())

    @property
    def simple_edge_count(self) -> int:
        return len(self.mult)

    @property
    def max_multiplicity(self) -> int:
        return max(self.mult.values(), default=0)

    def underlying(self) -> Graph:
        """The simple graph underlying the multigraph."""
        return Graph.from_edges(self.n, self.mult.keys())


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for n={g.n}")
    return len(g.adj[v])


def contraction_map(g: Graph, p: VertexSet) -> tuple[int, ...]:
    """New index of every vertex when ``p`` is merged into one vertex placed at ``min(p)``."""
    if not p.mask:
        raise InputError("cannot contract an empty vertex set")
    if not g.induces_connected(p.mask):
        raise InputError(f"contraction set {p.to_list()} does not induce a connected subgraph")
    anchor = (p.mask & -p.mask).bit_length() - 1
    mapping, nxt = [], 0
    for v in range(g.n):
        if v in p and v != anchor:
            mapping.append(-1)
            continue
        mapping.append(nxt)
        nxt += 1
    return tuple(mapping[anchor] if v in p else mapping[v] for v in range(g.n))


def contract_set(g: Graph, p: VertexSet) -> Graph:
    """Simple-graph contraction ``G/P``: parallel edges merge and self-loops vanish."""
    mapping = contraction_map(g, p)
    edges = {tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges() if mapping[u] != mapping[v]}
    return Graph.from_edges(g.n - len(p) + 1, sorted(edges))
