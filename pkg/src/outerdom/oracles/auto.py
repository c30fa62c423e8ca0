"""Oracle that picks the treewidth DP for outerplanar graphs and brute force otherwise."""

from dataclasses import dataclass

from outerdom.graphs.core import Graph
from outerdom.oracles.bruteforce import BRUTEFORCE_LIMIT, exact_mds_bruteforce
from outerdom.oracles.domination import MdsResult
from outerdom.oracles.treewidth import exact_mds_treewidth
from outerdom.outerplanar.recognition import is_outerplanar
from outerdom.utils.log import logger


@dataclass
class AutoOracleConfig:
    max_vertices: int = BRUTEFORCE_LIMIT
    max_size: int | None = None
    """Passed to the brute-force fallback for non-outerplanar inputs."""


class AutoOracle:
    def __init__(self, *, config_class: type = AutoOracleConfig, **kwargs):
        self.config = config_class(**kwargs)

    def solve(self, g: Graph) -> MdsResult:
        witness = is_outerplanar(g, certify=False)
        if witness.verdict:
            return exact_mds_treewidth(g, witness.embedding, verify=False)
        logger.debug(f"graph with n={g.n} is not outerplanar, falling back to brute force")
        return exact_mds_bruteforce(g, max_size=self.config.max_size, max_vertices=self.config.max_vertices)
