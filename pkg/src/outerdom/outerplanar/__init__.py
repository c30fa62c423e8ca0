"""Outerplanarity recognition, graph families, random generators and exhaustive enumeration."""

from outerdom.outerplanar.enumeration import enumerate_connected_outerplanar, enumerate_corpus
from outerdom.outerplanar.generators import (
    GENERATORS,
    enumerate_triangulations,
    gen_cycle_power,
    gen_path_power,
    gen_planar_gadget,
    gen_random_maximal_outerplanar,
    gen_random_outerplanar,
    path_power_order,
)
from outerdom.outerplanar.recognition import OuterplanarWitness, is_noncrossing, is_outerplanar, outer_order

__all__ = [
    "OuterplanarWitness",
    "is_outerplanar",
    "is_noncrossing",
    "outer_order",
    "gen_path_power",
    "gen_cycle_power",
    "gen_planar_gadget",
    "gen_random_maximal_outerplanar",
    "gen_random_outerplanar",
    "path_power_order",
    "enumerate_triangulations",
    "enumerate_connected_outerplanar",
    "enumerate_corpus",
    "GENERATORS",
]
