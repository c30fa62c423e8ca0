"""Numeric audit of the edge-counting bounds on ``H_G(S)`` for outerplanar graphs."""

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from outerdom.analysis.hgraph import HGraph, TieBreak, build_h_multigraph
from outerdom.analysis.partition import partition_wrt
from outerdom.exceptions import InputError
from outerdom.graphs.core import Graph, VertexSet
from outerdom.outerplanar.recognition import is_outerplanar

MAX_MULTIPLICITY = 9
EDGES_PER_MEMBER = 18
D_PER_MEMBER = 3
BD_PER_MEMBER = 39

Number = int | Fraction


def _number(x: Number) -> int | float:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else float(x)
    return x


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: Number
    relation: str
    rhs: Number

    @property
    def ok(self) -> bool:
        return self.lhs <= self.rhs if self.relation == "<=" else self.lhs >= self.rhs

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": _number(self.lhs), "relation": self.relation, "rhs": _number(self.rhs), "ok": self.ok}


@dataclass(frozen=True)
class AuditReport:
    s_size: int
    b_size: int
    d_size: int
    bd_union_size: int
    max_multiplicity: int
    edges_h: int
    edges_h_simple: int
    bound_checks: tuple[BoundCheck, ...]
    h: HGraph

    @property
    def all_ok(self) -> bool:
        return all(check.ok for check in self.bound_checks)

    def check(self, name: str) -> BoundCheck:
        for check in self.bound_checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "s_size": self.s_size,
            "b_size": self.b_size,
            "d_size": self.d_size,
            "bd_union_size": self.bd_union_size,
            "max_multiplicity": self.max_multiplicity,
            "edges_h": self.edges_h,
            "edges_h_simple": self.edges_h_simple,
            "bound_checks": [check.to_dict() for check in self.bound_checks],
            "all_ok": self.all_ok,
        }


def lemma22_audit(
    g: Graph,
    s: VertexSet,
    tie_break: TieBreak | str = TieBreak.SMALLEST,
    *,
    seed: int = 0,
    overrides: Mapping[int, int] | None = None,
    check_outerplanar: bool = True,
) -> AuditReport:
    """Evaluate every bound on ``H_G(S)`` and record both sides of each inequality.

    ``g`` must be connected and outerplanar and ``s`` must dominate it. Callers that already know
    the graph is outerplanar (the enumerated corpus) may skip the recognizer.
    """
    if not g.is_connected():
        raise InputError("the audit needs a connected graph; audit each component separately")
    if check_outerplanar and not is_outerplanar(g, certify=False).verdict:
        raise InputError("the audit needs an outerplanar graph")
    part = partition_wrt(g, s)
    h = build_h_multigraph(g, s, tie_break, seed=seed, overrides=overrides)
    k, b, d = len(s), len(part.b), len(part.d)
    edges, simple = h.base.edge_count, h.base.simple_edge_count
    checks = (
        BoundCheck("max_multiplicity", h.base.max_multiplicity, "<=", MAX_MULTIPLICITY),
        # a single vertex carries no edges, the outerplanar edge bound applies from two vertices on
        BoundCheck("simple_edges", simple, "<=", max(2 * k - 3, 0)),
        BoundCheck("edges_upper", edges, "<=", EDGES_PER_MEMBER * k),
        BoundCheck("edges_lower", edges, ">=", Fraction(b, 2)),
        BoundCheck("d_bound", d, "<=", D_PER_MEMBER * k),
        BoundCheck("bd_bound", b + d, "<=", BD_PER_MEMBER * k),
    )
    return AuditReport(
        s_size=k,
        b_size=b,
        d_size=d,
        bd_union_size=len(part.b | part.d),
        max_multiplicity=h.base.max_multiplicity,
        edges_h=edges,
        edges_h_simple=simple,
        bound_checks=checks,
        h=h,
    )


def audit_components(g: Graph, s: VertexSet, **kwargs) -> list[tuple[tuple[int, ...], AuditReport]]:
    """Audit every connected component on its own; reports use component-local labels."""
    if s.n != g.n:
        raise InputError(f"vertex set over {s.n} vertices used with a graph on {g.n}")
    reports = []
    for comp in g.components():
        sub, originals = g.induced(comp)
        local = VertexSet.of(sub.n, (i for i, v in enumerate(originals) if v in s))
        reports.append((originals, lemma22_audit(sub, local, **kwargs)))
    return reports
