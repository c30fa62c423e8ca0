"""End-to-end report: local selection size against the exact optimum."""

from dataclasses import dataclass
from fractions import Fraction

from outerdom import MdsOracle
from outerdom.graphs.core import Graph, VertexSet
from outerdom.local.simulator import run_algorithm1
from outerdom.oracles.bruteforce import exact_mds_bruteforce
from outerdom.oracles.domination import MdsResult
from outerdom.oracles.treewidth import exact_mds_treewidth
from outerdom.outerplanar.recognition import is_outerplanar
from outerdom.utils.log import logger

APPROXIMATION_FACTOR = 5
NOT_OUTERPLANAR_WARNING = "graph is not outerplanar; the factor-5 guarantee does not apply"


@dataclass(frozen=True)
class RunReport:
    n: int
    m: int
    alg_size: int
    opt_size: int
    ratio: Fraction
    """``alg_size / opt_size``; the empty graph has ratio 1."""
    guarantee_ok: bool
    outerplanar: bool
    chosen: VertexSet
    optimum: MdsResult
    warning: str | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alg_size": self.alg_size,
            "opt_size": self.opt_size,
            "ratio": round(float(self.ratio), 6),
            "ratio_exact": str(self.ratio),
            "guarantee_ok": self.guarantee_ok,
            "outerplanar": self.outerplanar,
            "chosen": self.chosen.to_list(),
            "witness": self.optimum.witness.to_list(),
            "method": self.optimum.method.value,
            "warning": self.warning,
        }


def approximation_report(g: Graph, oracle: MdsOracle | None = None) -> RunReport:
    """Compare the one-round selection with ``gamma(g)``.

    Without an explicit ``oracle`` outerplanar graphs are solved by the treewidth DP and everything
    else by brute force, whose capability errors propagate.
    """
    witness = is_outerplanar(g, certify=False)
    chosen = run_algorithm1(g).chosen
    if oracle is not None:
        optimum = oracle.solve(g)
    elif witness.verdict:
        optimum = exact_mds_treewidth(g, witness.embedding, verify=False)
    else:
        optimum = exact_mds_bruteforce(g)
    alg, opt = len(chosen), optimum.size
    warning = None
    if not witness.verdict:
        warning = NOT_OUTERPLANAR_WARNING
        logger.warning(f"n={g.n}, m={g.m}: {warning}")
    return RunReport(
        n=g.n,
        m=g.m,
        alg_size=alg,
        opt_size=opt,
        ratio=Fraction(alg, opt) if opt else Fraction(1),
        guarantee_ok=alg <= APPROXIMATION_FACTOR * opt,
        outerplanar=witness.verdict,
        chosen=chosen,
        optimum=optimum,
        warning=warning,
    )
