"""Experiment harness: tightness sweep, exhaustive verification, planar gap and random runs.

Instances fan out over a thread pool; rows always come back in input order.
"""

import concurrent.futures
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Any, TypeVar

from outerdom.analysis.audit import lemma22_audit
from outerdom.analysis.partition import central_selection
from outerdom.analysis.report import APPROXIMATION_FACTOR, approximation_report
from outerdom.analysis.search import LEMMA21_CONSTANT, lemma21_check
from outerdom.config import load_config
from outerdom.exceptions import CapabilityError, InputError, OuterdomError
from outerdom.graphs.canonical import canonical_code
from outerdom.graphs.core import Graph
from outerdom.local.simulator import run_algorithm1
from outerdom.oracles.bruteforce import exact_mds_bruteforce
from outerdom.oracles.domination import enumerate_minimal_dominating_sets, is_dominating
from outerdom.oracles.treewidth import exact_mds_treewidth
from outerdom.outerplanar.enumeration import enumerate_corpus
from outerdom.outerplanar.generators import (
    gen_path_power,
    gen_planar_gadget,
    gen_random_outerplanar,
    path_power_order,
    spawn_seeds,
)
from outerdom.run.utils.progress import ExperimentProgressManager
from outerdom.utils.log import logger

VERIFY_MIN, VERIFY_MAX = 3, 9
PLANAR_GAP_MIN_Q = 4
GADGET_OPTIMUM = 2

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class ExperimentConfig:
    name: str
    n_list: list[int] = field(default_factory=list)
    n_max: int = 8
    constant: int = LEMMA21_CONSTANT
    p_list: list[int] = field(default_factory=list)
    q: int = 5
    n: int = 15
    count: int = 1000
    keep_prob: float = 0.9
    seed: int = 0
    threads: int | None = None
    out: Path | None = None
    format: str | None = None

    def __post_init__(self):
        if self.format is not None and self.format not in ("csv", "json"):
            raise InputError(f"format must be csv or json, got {self.format!r}")
        if self.name == "tightness" and not self.n_list:
            raise InputError("tightness needs a nonempty n_list")
        if self.name == "planar_gap" and not self.p_list:
            raise InputError("planar_gap needs a nonempty p_list")
        if self.name == "random" and self.count < 1:
            raise InputError(f"random needs count >= 1, got {self.count}")
        if self.threads is not None and self.threads < 1:
            raise InputError(f"threads must be positive, got {self.threads}")

    @classmethod
    def from_yaml(cls, config_spec: str | Path, **overrides: Any) -> "ExperimentConfig":
        """Load a YAML config; keyword overrides that are not None win over file values."""
        known = {f.name for f in fields(cls)}
        data = load_config(config_spec)
        unknown = set(data) - known
        if unknown:
            raise InputError(f"unknown experiment config keys: {sorted(unknown)}")
        return cls(**(data | {k: v for k, v in overrides.items() if v is not None}))


def _fan_out(
    func: Callable[[T], R],
    items: Sequence[T],
    threads: int,
    progress: ExperimentProgressManager | None = None,
    label: Callable[[int, T], str] = lambda i, _: str(i),
    status: Callable[[R], str] = lambda _: "done",
) -> list[R]:
    def run(indexed: tuple[int, T]) -> R:
        i, item = indexed
        result = func(item)
        if progress is not None:
            progress.on_instance_end(label(i, item), status(result))
        return result

    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(run, enumerate(items)))


def _identify(g: Graph, index: int | str, exc: OuterdomError) -> OuterdomError:
    code = canonical_code(g).hex() if g.n <= 16 else "-"
    return type(exc)(f"instance {index} (n={g.n}, code={code}): {exc}")


def exp_tightness(
    n_list: Iterable[int], *, threads: int = 1, progress: ExperimentProgressManager | None = None
) -> list[dict]:
    """Path powers ``G_n^-``: the selection has ``n - 4`` vertices and the optimum ``n / 5``."""
    n_list = list(n_list)
    if not n_list:
        raise InputError("n_list must not be empty")
    for n in n_list:
        if n < 10 or n % 10:
            raise InputError(f"tightness needs n >= 10 with n divisible by 10, got {n}")

    def row(n: int) -> dict:
        g = gen_path_power(n)
        alg = len(run_algorithm1(g).chosen)
        opt = exact_mds_treewidth(g, path_power_order(n), verify=False).size
        logger.debug(f"tightness n={n}: alg={alg}, opt={opt}")
        return {"n": n, "alg_size": alg, "opt_size": opt, "ratio": Fraction(alg, opt)}

    return _fan_out(row, n_list, threads, progress, label=lambda _, n: f"n={n}")


@dataclass
class VerifySummary:
    instances: int = 0
    dominating_ok: int = 0
    lemma21_ok: int = 0
    lemma22_ok: int = 0
    ratio_ok: int = 0
    oracle_ok: int = 0
    simulator_ok: int = 0

    @property
    def all_ok(self) -> bool:
        return all(getattr(self, f.name) == self.instances for f in fields(self))

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)} | {"all_ok": self.all_ok}


def verify_instance(g: Graph, constant: int = LEMMA21_CONSTANT) -> dict[str, bool]:
    """Every check of the verification sweep on one connected outerplanar graph."""
    selection = run_algorithm1(g, record_trace=True)
    trace = selection.trace
    assert trace is not None
    one_bit_round = trace.rounds == 1 and len(trace.messages) == 2 * g.m
    one_bit_round = one_bit_round and all(symbol in (0, 1) for *_, symbol in trace.messages)
    bf = exact_mds_bruteforce(g)
    dp = exact_mds_treewidth(g)
    minimal_sets = list(enumerate_minimal_dominating_sets(g))
    return {
        "dominating_ok": is_dominating(g, selection.chosen),
        "lemma21_ok": all(lemma21_check(g, s, constant) for s in minimal_sets),
        "lemma22_ok": all(lemma22_audit(g, s, check_outerplanar=False).all_ok for s in minimal_sets),
        "ratio_ok": len(selection.chosen) <= APPROXIMATION_FACTOR * bf.size,
        "oracle_ok": bf.size == dp.size and is_dominating(g, bf.witness) and is_dominating(g, dp.witness),
        "simulator_ok": one_bit_round and selection.chosen == central_selection(g),
    }


def verify_corpus(n_max: int) -> list[Graph]:
    if not VERIFY_MIN <= n_max <= VERIFY_MAX:
        raise CapabilityError(f"verify supports {VERIFY_MIN} <= n_max <= {VERIFY_MAX}, got {n_max}")
    return list(enumerate_corpus(n_max))


def exp_verify(
    n_max: int = 8,
    *,
    constant: int = LEMMA21_CONSTANT,
    threads: int = 1,
    progress: ExperimentProgressManager | None = None,
    corpus: Sequence[Graph] | None = None,
) -> VerifySummary:
    """Run the whole enumerated corpus through the selection, both oracles and both bound checks."""
    corpus = list(corpus) if corpus is not None else verify_corpus(n_max)
    logger.info(f"verifying {len(corpus)} connected outerplanar graphs with n <= {n_max}")

    def check(indexed: tuple[int, Graph]) -> dict[str, bool]:
        i, g = indexed
        try:
            return verify_instance(g, constant)
        except OuterdomError as e:
            raise _identify(g, i, e) from e

    results = _fan_out(
        check,
        list(enumerate(corpus)),
        threads,
        progress,
        label=lambda _, item: f"n={item[1].n}#{item[0]}",
        status=lambda result: "ok" if all(result.values()) else "violation",
    )
    summary = VerifySummary(instances=len(results))
    for (i, g), result in zip(enumerate(corpus), results):
        for name, ok in result.items():
            setattr(summary, name, getattr(summary, name) + ok)
            if not ok:
                logger.warning(f"instance {i} (n={g.n}, edges={list(g.edges())}) failed {name}")
    return summary


def exp_planar_gap(
    p_list: Iterable[int], q: int, *, threads: int = 1, progress: ExperimentProgressManager | None = None
) -> list[dict]:
    """Gadgets ``G_{p,q}`` with domination number 2; the selection keeps every branch vertex."""
    p_list = list(p_list)
    if not p_list:
        raise InputError("p_list must not be empty")
    if q < PLANAR_GAP_MIN_Q:
        raise InputError(f"planar gap needs q >= {PLANAR_GAP_MIN_Q} so branch vertices reach degree 4, got {q}")

    def row(p: int) -> dict:
        g = gen_planar_gadget(p, q)
        alg = len(run_algorithm1(g).chosen)
        opt = exact_mds_bruteforce(g, max_size=GADGET_OPTIMUM).size
        return {"p": p, "q": q, "n": g.n, "alg_size": alg, "opt_size": opt, "ratio": Fraction(alg, opt)}

    return _fan_out(row, p_list, threads, progress, label=lambda _, p: f"p={p}")


@dataclass
class RandomRun:
    rows: list[dict]
    aggregate: dict


def exp_random(
    n: int,
    count: int,
    keep_prob: float,
    seed: int,
    *,
    threads: int = 1,
    progress: ExperimentProgressManager | None = None,
) -> RandomRun:
    """Random outerplanar graphs from independent child seeds; counts ratio violations."""
    if count < 1:
        raise InputError(f"count must be positive, got {count}")
    seeds = spawn_seeds(seed, count)

    def row(indexed: tuple[int, int]) -> dict:
        i, child = indexed
        g = gen_random_outerplanar(n, keep_prob, child)
        try:
            report = approximation_report(g)
        except OuterdomError as e:
            raise _identify(g, i, e) from e
        return {
            "index": i,
            "seed": child,
            "n": g.n,
            "m": g.m,
            "alg_size": report.alg_size,
            "opt_size": report.opt_size,
            "ratio": report.ratio,
            "guarantee_ok": report.guarantee_ok,
        }

    rows = _fan_out(
        row,
        list(enumerate(seeds)),
        threads,
        progress,
        status=lambda r: "ok" if r["guarantee_ok"] else "violation",
    )
    ratios = [r["ratio"] for r in rows]
    aggregate = {
        "instances": len(rows),
        "max_ratio": max(ratios),
        "mean_ratio": sum(ratios, Fraction(0)) / len(ratios),
        "violations": sum(not r["guarantee_ok"] for r in rows),
    }
    return RandomRun(rows, aggregate)
