"""Exact minimum dominating set oracles."""

import importlib

from outerdom import MdsOracle
from outerdom.exceptions import InputError
from outerdom.oracles.bruteforce import BRUTEFORCE_LIMIT, BruteForceConfig, BruteForceOracle, exact_mds_bruteforce
from outerdom.oracles.domination import (
    MdsMethod,
    MdsResult,
    dominated_mask,
    enumerate_dominating_sets,
    enumerate_minimal_dominating_sets,
    is_dominating,
    require_dominating,
)
from outerdom.oracles.treewidth import TreewidthConfig, TreewidthOracle, ear_decomposition, exact_mds_treewidth

_ORACLE_MAPPING = {
    "auto": "outerdom.oracles.auto.AutoOracle",
    "bf": "outerdom.oracles.bruteforce.BruteForceOracle",
    "dp": "outerdom.oracles.treewidth.TreewidthOracle",
}


def get_oracle_class(spec: str) -> type[MdsOracle]:
    full_path = _ORACLE_MAPPING.get(spec, spec)
    try:
        module_name, class_name = full_path.rsplit(".", 1)
        module = importlib.import_module(module_name)
        return getattr(module, class_name)
    except (ValueError, ImportError, AttributeError):
        msg = f"Unknown oracle: {spec} (resolved to {full_path}, available: {list(_ORACLE_MAPPING)})"
        raise InputError(msg)


def get_oracle(spec: str = "auto", **kwargs) -> MdsOracle:
    return get_oracle_class(spec)(**kwargs)


__all__ = [
    "BRUTEFORCE_LIMIT",
    "BruteForceConfig",
    "BruteForceOracle",
    "MdsMethod",
    "MdsResult",
    "TreewidthConfig",
    "TreewidthOracle",
    "dominated_mask",
    "ear_decomposition",
    "enumerate_dominating_sets",
    "enumerate_minimal_dominating_sets",
    "exact_mds_bruteforce",
    "exact_mds_treewidth",
    "get_oracle",
    "get_oracle_class",
    "is_dominating",
    "require_dominating",
]
