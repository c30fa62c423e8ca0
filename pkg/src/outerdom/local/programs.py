"""Node programs for the synchronous simulator."""

import sys
from dataclasses import dataclass, replace
from typing import Any


@dataclass(frozen=True)
class ThresholdState:
    degree: int
    heard_high: bool = False


@dataclass
class ThresholdProgramConfig:
    threshold: int = 4
    """A node joins if its degree reaches this, or if no neighbor's degree does."""


class ThresholdProgram:
    """One round, one bit per port: "my degree is at least the threshold".

    With threshold 4 this is the outerplanar 5-approximation; with threshold 2 it is the
    forest 3-approximation (every vertex of degree at least 2, plus isolated vertices and edges).
    """

    alphabet = (0, 1)

    def __init__(self, *, config_class: type = ThresholdProgramConfig, **kwargs):
        self.config = config_class(**kwargs)
        self.name = f"threshold-{self.config.threshold}"

    def init(self, degree: int) -> ThresholdState:
        return ThresholdState(degree)

    def compose(self, round_: int, state: ThresholdState) -> list[int]:
        return [int(state.degree >= self.config.threshold)] * state.degree

    def absorb(self, round_: int, state: ThresholdState, received: list[Any]) -> ThresholdState:
        return replace(state, heard_high=state.heard_high or any(bit == 1 for bit in received))

    def decide(self, state: ThresholdState) -> bool:
        return state.degree >= self.config.threshold or not state.heard_high


class DegreeBroadcastProgram(ThresholdProgram):
    """Same decision rule, but every node sends its full degree instead of one bit."""

    alphabet = range(sys.maxsize)

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self.name = f"degree-broadcast-{self.config.threshold}"

    def compose(self, round_: int, state: ThresholdState) -> list[int]:
        return [state.degree] * state.degree

    def absorb(self, round_: int, state: ThresholdState, received: list[Any]) -> ThresholdState:
        heard = any(d >= self.config.threshold for d in received)
        return replace(state, heard_high=state.heard_high or heard)


def algorithm1_program() -> ThresholdProgram:
    """The 1-round, 1-bit program selecting ``V_4+ ∪ V*``."""
    return ThresholdProgram(threshold=4)


def forest_program() -> ThresholdProgram:
    return ThresholdProgram(threshold=2)
