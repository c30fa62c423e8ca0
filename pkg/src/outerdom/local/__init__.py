"""LOCAL-model simulator and node programs."""

import importlib

from outerdom import NodeProgram
from outerdom.exceptions import InputError
from outerdom.local.programs import (
    DegreeBroadcastProgram,
    ThresholdProgram,
    algorithm1_program,
    forest_program,
)
from outerdom.local.simulator import SelectionResult, SimTrace, run_algorithm1, run_sync

_PROGRAM_MAPPING = {
    "alg1": ("outerdom.local.programs.ThresholdProgram", {"threshold": 4}),
    "alg1-degree": ("outerdom.local.programs.DegreeBroadcastProgram", {"threshold": 4}),
    "forest": ("outerdom.local.programs.ThresholdProgram", {"threshold": 2}),
}


def get_program_class(spec: str) -> type:
    full_path = _PROGRAM_MAPPING.get(spec, (spec, {}))[0]
    try:
        module_name, class_name = full_path.rsplit(".", 1)
        module = importlib.import_module(module_name)
        return getattr(module, class_name)
    except (ValueError, ImportError, AttributeError):
        msg = f"Unknown node program: {spec} (resolved to {full_path}, available: {list(_PROGRAM_MAPPING)})"
        raise InputError(msg)


def get_program(spec: str, **kwargs) -> NodeProgram:
    """Instantiate a program by short name (``alg1``, ``alg1-degree``, ``forest``) or import path."""
    preset = dict(_PROGRAM_MAPPING.get(spec, (spec, {}))[1])
    return get_program_class(spec)(**(preset | kwargs))


__all__ = [
    "ThresholdProgram",
    "DegreeBroadcastProgram",
    "algorithm1_program",
    "forest_program",
    "SimTrace",
    "SelectionResult",
    "run_sync",
    "run_algorithm1",
    "get_program",
    "get_program_class",
]
