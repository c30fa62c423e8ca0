"""Synchronous, anonymous, port-numbered message passing.

Port ``p`` of node ``v`` leads to the ``p``-th neighbor in ``v``'s sorted adjacency. Within a round
every node composes before any node absorbs, so a run is a deterministic function of
(graph, program, rounds). Global indices appear only in the recorded trace.
"""

from dataclasses import dataclass
from typing import Any

from outerdom import NodeProgram
from outerdom.exceptions import InputError, ProtocolError
from outerdom.graphs.core import Graph, VertexSet
from outerdom.local.programs import algorithm1_program


@dataclass(frozen=True)
class SimTrace:
    rounds: int
    messages: tuple[tuple[int, int, int, Any], ...]
    """``(round, sender, receiver, symbol)`` for every edge direction of every round."""
    decisions: tuple[bool, ...]

    def to_dict(self) -> dict:
        return {
            "rounds": self.rounds,
            "messages": [list(message) for message in self.messages],
            "chosen": [v for v, chosen in enumerate(self.decisions) if chosen],
        }


@dataclass(frozen=True)
class SelectionResult:
    chosen: VertexSet
    trace: SimTrace | None = None


def run_sync(g: Graph, prog: NodeProgram, rounds: int, record_trace: bool = False) -> SelectionResult:
    if rounds < 0:
        raise InputError(f"rounds must be non-negative, got {rounds}")
    port_of = [{u: p for p, u in enumerate(nbrs)} for nbrs in g.adj]
    states = [prog.init(len(nbrs)) for nbrs in g.adj]
    log: list[tuple[int, int, int, Any]] = []
    for round_ in range(1, rounds + 1):
        outboxes = [prog.compose(round_, state) for state in states]
        inboxes: list[list[Any]] = [[None] * len(nbrs) for nbrs in g.adj]
        for u, outbox in enumerate(outboxes):
            if len(outbox) != len(g.adj[u]):
                raise ProtocolError(
                    f"program {prog.name} composed {len(outbox)} messages for a node with {len(g.adj[u])} ports"
                )
            for port, symbol in enumerate(outbox):
                if symbol not in prog.alphabet:
                    raise ProtocolError(f"program {prog.name} emitted {symbol!r} outside its alphabet")
                v = g.adj[u][port]
                inboxes[v][port_of[v][u]] = symbol
                if record_trace:
                    log.append((round_, u, v, symbol))
        states = [prog.absorb(round_, state, inbox) for state, inbox in zip(states, inboxes)]
    decisions = tuple(bool(prog.decide(state)) for state in states)
    chosen = VertexSet.of(g.n, (v for v, d in enumerate(decisions) if d))
    trace = SimTrace(rounds, tuple(log), decisions) if record_trace else None
    return SelectionResult(chosen, trace)


def run_algorithm1(g: Graph, record_trace: bool = False) -> SelectionResult:
    """One round of the 1-bit threshold-4 program; the result equals ``V_4+ ∪ V*``."""
    return run_sync(g, algorithm1_program(), 1, record_trace)
