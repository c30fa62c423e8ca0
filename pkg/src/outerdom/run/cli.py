#!/usr/bin/env python3

"""Command-line entry point.

Standard output carries data only (graphs, CSV rows, JSON documents); logs and progress go to
standard error.

Usage:
    outerdom generate path-power --n 10 > g10.txt
    outerdom simulate --graph g10.txt --trace trace.json
    outerdom mds --graph g10.txt --method dp
    outerdom --format json tightness --n-list 10,20,50
    outerdom verify --nmax 8
"""

import functools
import logging
import time
from collections.abc import Callable
from contextlib import nullcontext
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import typer
from rich.live import Live

from outerdom import __version__, get_default_threads
from outerdom.analysis.audit import audit_components, lemma22_audit
from outerdom.analysis.hgraph import TieBreak
from outerdom.analysis.report import approximation_report
from outerdom.analysis.search import LEMMA21_CONSTANT, counterexample_search
from outerdom.exceptions import (
    EXIT_CAPABILITY_ERROR,
    EXIT_INPUT_ERROR,
    EXIT_VERIFICATION_FAILURE,
    CapabilityError,
    InputError,
    ProtocolError,
    VerificationFailure,
)
from outerdom.graphs.core import VertexSet
from outerdom.graphs.io import format_graph, read_graph
from outerdom.local import get_program
from outerdom.local.simulator import run_sync
from outerdom.oracles import get_oracle
from outerdom.outerplanar.generators import GENERATORS
from outerdom.run.experiments import (
    ExperimentConfig,
    exp_planar_gap,
    exp_random,
    exp_tightness,
    exp_verify,
    verify_corpus,
)
from outerdom.run.utils.progress import ExperimentProgressManager
from outerdom.run.utils.save import save_document, save_rows, save_rows_with_summary, to_json
from outerdom.utils.log import add_file_handler, logger, set_log_level, stderr_console

app = typer.Typer(rich_markup_mode="rich", add_completion=False, no_args_is_help=True)

_HELP_TEXT = f"""Local dominating-set approximation on outerplanar graphs (v{__version__}).

[bold]Graphs:[/bold]     [green]generate[/green], [green]simulate[/green], [green]mds[/green], [green]audit[/green], [green]report[/green]
[bold]Experiments:[/bold] [green]tightness[/green], [green]verify[/green], [green]planar-gap[/green], [green]random[/green], [green]search[/green]

Exit codes: 0 success, 1 input error, 2 verification failure, 3 capability error.
"""


@dataclass
class CliState:
    format: str = "csv"
    out: Path | None = None
    seed: int = 0
    threads: int = 1
    config: Path | None = None
    quiet: bool = False


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}")


def _exit_codes(func: Callable) -> Callable:
    """Map the error taxonomy onto process exit codes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (InputError, ProtocolError, OSError) as e:
            logger.error(str(e))
            raise typer.Exit(EXIT_INPUT_ERROR)
        except VerificationFailure as e:
            logger.error(str(e))
            raise typer.Exit(EXIT_VERIFICATION_FAILURE)
        except CapabilityError as e:
            logger.error(str(e))
            raise typer.Exit(EXIT_CAPABILITY_ERROR)

    return wrapper


def _state(ctx: typer.Context) -> CliState:
    return ctx.obj if isinstance(ctx.obj, CliState) else CliState()


def _progress(state: CliState, total: int, description: str) -> tuple[ExperimentProgressManager | None, Any]:
    if state.quiet:
        return None, nullcontext()
    manager = ExperimentProgressManager(total, description)
    return manager, Live(manager.render_group, console=stderr_console, refresh_per_second=4, transient=True)


def _experiment_config(ctx: typer.Context, name: str, **overrides: Any) -> ExperimentConfig:
    """Load the experiment config; output options from the file apply unless given on the command line."""
    state = _state(ctx)
    cfg = ExperimentConfig.from_yaml(state.config or name, **overrides)
    if cfg.format is not None and not _given(ctx, "fmt"):
        state.format = cfg.format
    if cfg.out is not None and not _given(ctx, "out"):
        state.out = Path(cfg.out)
    if cfg.threads is not None and not _given(ctx, "threads"):
        state.threads = cfg.threads
    ctx.obj = state
    return cfg


@app.callback(help=_HELP_TEXT)
def main(
    ctx: typer.Context,
    fmt: str = typer.Option("csv", "--format", help="Output format for result tables: csv or json"),
    out: Path | None = typer.Option(None, "--out", help="Write data to this file instead of standard output"),
    seed: int = typer.Option(0, "--seed", help="Seed for random generators (unsigned 64-bit)"),
    threads: int | None = typer.Option(None, "--threads", help="Worker threads (default: OUTERDOM_THREADS or 1)"),
    config: Path | None = typer.Option(None, "--config", help="Experiment YAML config (name or path)"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="Debug logging"),
    quiet: bool = typer.Option(False, "--quiet", help="Warnings only, no progress display"),
    log_file: Path | None = typer.Option(None, "--log-file", help="Also write logs to this file"),
) -> None:
    if fmt not in ("csv", "json"):
        logger.error(f"--format must be csv or json, got {fmt!r}")
        raise typer.Exit(EXIT_INPUT_ERROR)
    if verbose:
        set_log_level(logging.DEBUG)
    elif quiet:
        set_log_level(logging.WARNING)
    if log_file is not None:
        add_file_handler(log_file, print_path=False)
    ctx.obj = CliState(
        format=fmt,
        out=out,
        seed=seed,
        threads=threads if threads is not None else get_default_threads(),
        config=config,
        quiet=quiet,
    )


@app.command(help="Emit a graph from a named family in the graph text format.")
@_exit_codes
def generate(
    ctx: typer.Context,
    family: str = typer.Argument(..., help=f"One of: {', '.join(GENERATORS)}"),
    n: int = typer.Option(10, "--n", help="Vertex count (path-power, cycle-power, random-mop, random-op)"),
    p: int = typer.Option(3, "--p", help="Branch vertices (planar-gadget)"),
    q: int = typer.Option(4, "--q", help="Leaves per branch vertex (planar-gadget)"),
    keep_prob: float = typer.Option(0.9, "--keep-prob", help="Edge survival probability (random-op)"),
) -> None:
    state = _state(ctx)
    if family not in GENERATORS:
        raise InputError(f"unknown family {family!r}, available: {list(GENERATORS)}")
    match family:
        case "planar-gadget":
            g = GENERATORS[family](p, q)
        case "random-mop":
            g = GENERATORS[family](n, state.seed)
        case "random-op":
            g = GENERATORS[family](n, keep_prob, state.seed)
        case _:
            g = GENERATORS[family](n)
    if state.out is None:
        typer.echo(format_graph(g), nl=False)
    else:
        state.out.write_text(format_graph(g))
        logger.info(f"Saved graph to '{state.out}'")


@app.command(help="Run a node program in the synchronous simulator.")
@_exit_codes
def simulate(
    ctx: typer.Context,
    graph: Path = typer.Option(..., "--graph", help="Graph file"),
    program: str = typer.Option("alg1", "--program", help="alg1, alg1-degree, forest or an import path"),
    rounds: int = typer.Option(1, "--rounds", help="Synchronous rounds"),
    trace: Path | None = typer.Option(None, "--trace", help="Write the message trace as JSON"),
) -> None:
    state = _state(ctx)
    g = read_graph(graph)
    prog = get_program(program)
    result = run_sync(g, prog, rounds, record_trace=trace is not None)
    if trace is not None and result.trace is not None:
        trace.write_text(to_json(result.trace.to_dict()))
        logger.info(f"Saved trace to '{trace}'")
    save_document(
        {"program": prog.name, "rounds": rounds, "size": len(result.chosen), "chosen": result.chosen.to_list()},
        state.out,
        print_fct=logger.info,
    )


@app.command(help="Exact minimum dominating set.")
@_exit_codes
def mds(
    ctx: typer.Context,
    graph: Path = typer.Option(..., "--graph", help="Graph file"),
    method: str = typer.Option("auto", "--method", help="auto, bf or dp"),
) -> None:
    state = _state(ctx)
    if method not in ("auto", "bf", "dp"):
        raise InputError(f"--method must be auto, bf or dp, got {method!r}")
    g = read_graph(graph)
    start = time.perf_counter()
    result = get_oracle(method).solve(g)
    millis = round((time.perf_counter() - start) * 1000, 3)
    save_document(result.to_dict() | {"millis": millis}, state.out, print_fct=logger.info)


@app.command(help="Audit the H_G(S) edge bounds for a dominating set (per connected component).")
@_exit_codes
def audit(
    ctx: typer.Context,
    graph: Path = typer.Option(..., "--graph", help="Graph file"),
    members: str = typer.Option(..., "--set", help='Dominating set, e.g. "1,4,7"'),
    tie_break: TieBreak = typer.Option(TieBreak.SMALLEST, "--tie-break", help="Choice of s(u) among S-neighbors"),
) -> None:
    state = _state(ctx)
    g = read_graph(graph)
    s = VertexSet.of(g.n, _parse_ints(members))
    if g.is_connected():
        report = lemma22_audit(g, s, tie_break, seed=state.seed)
        save_document(report.to_dict(), state.out, print_fct=logger.info)
        ok = report.all_ok
    else:
        reports = audit_components(g, s, tie_break=tie_break, seed=state.seed)
        components = [{"vertices": list(originals)} | report.to_dict() for originals, report in reports]
        save_document({"components": components}, state.out, print_fct=logger.info)
        ok = all(report.all_ok for _, report in reports)
    if not ok:
        raise VerificationFailure("an audited bound does not hold")


@app.command(help="Local selection size against the exact optimum.")
@_exit_codes
def report(
    ctx: typer.Context,
    graph: Path = typer.Option(..., "--graph", help="Graph file"),
) -> None:
    state = _state(ctx)
    run = approximation_report(read_graph(graph))
    save_document(run.to_dict(), state.out, print_fct=logger.info)
    if run.outerplanar and not run.guarantee_ok:
        raise VerificationFailure(f"selection of {run.alg_size} exceeds 5 x {run.opt_size} on an outerplanar graph")


@app.command(help="Search enumerated outerplanar graphs for a set with constant*|S| < |B|+|D|.")
@_exit_codes
def search(
    ctx: typer.Context,
    nmax: int = typer.Option(9, "--nmax", help="Largest vertex count to enumerate (3..10)"),
    all_sets: bool = typer.Option(False, "--all-sets", help="Check every dominating set, not only minimal ones (n <= 7)"),
    constant: int = typer.Option(LEMMA21_CONSTANT, "--constant", help="Multiplier on |S|; lower it to exercise the harness"),
) -> None:
    state = _state(ctx)
    found = counterexample_search(nmax, constant=constant, all_sets=all_sets, threads=state.threads)
    data: dict[str, Any] = {"found": found is not None, "n_max": nmax, "constant": constant, "all_sets": all_sets}
    if found is not None:
        data["instance"] = found.to_dict()
    save_document(data, state.out, print_fct=logger.info)
    if found is not None and constant >= LEMMA21_CONSTANT:
        raise VerificationFailure(f"counterexample found for constant {constant}")


@app.command(help="Ratio sweep over the path-power family.")
@_exit_codes
def tightness(
    ctx: typer.Context,
    n_list: str | None = typer.Option(None, "--n-list", help="Comma-separated n values, multiples of 10"),
) -> None:
    cfg = _experiment_config(ctx, "tightness", n_list=_parse_ints(n_list) if n_list else None)
    state = _state(ctx)
    progress, live = _progress(state, len(cfg.n_list), "Tightness")
    with live:
        rows = exp_tightness(cfg.n_list, threads=state.threads, progress=progress)
    save_rows(rows, state.out, state.format, print_fct=logger.info)
    ratios = [row["ratio"] for row in rows]
    if any(r >= 5 for r in ratios):
        raise VerificationFailure("a path-power ratio reached 5")


@app.command(help="Exhaustive verification over every connected outerplanar graph up to --nmax vertices.")
@_exit_codes
def verify(
    ctx: typer.Context,
    nmax: int | None = typer.Option(None, "--nmax", help="Largest vertex count (3..9, default 8)"),
    constant: int | None = typer.Option(None, "--constant", help="Multiplier on |S| for the |B|+|D| check"),
) -> None:
    cfg = _experiment_config(ctx, "verify", n_max=nmax, constant=constant)
    state = _state(ctx)
    corpus = verify_corpus(cfg.n_max)
    progress, live = _progress(state, len(corpus), "Verify")
    with live:
        summary = exp_verify(cfg.n_max, constant=cfg.constant, threads=state.threads, progress=progress, corpus=corpus)
    if state.format == "csv":
        save_rows([summary.to_dict()], state.out, "csv", print_fct=logger.info)
    else:
        save_document(summary.to_dict(), state.out, print_fct=logger.info)
    if not summary.all_ok:
        raise VerificationFailure(f"verification counters do not all equal {summary.instances}")


@app.command("planar-gap", help="Planar gadgets where degree-threshold selection is far from optimal.")
@_exit_codes
def planar_gap(
    ctx: typer.Context,
    p_list: str | None = typer.Option(None, "--p-list", help="Comma-separated branch counts"),
    q: int | None = typer.Option(None, "--q", help="Leaves per branch vertex (>= 4)"),
) -> None:
    cfg = _experiment_config(ctx, "planar_gap", p_list=_parse_ints(p_list) if p_list else None, q=q)
    state = _state(ctx)
    progress, live = _progress(state, len(cfg.p_list), "Planar gap")
    with live:
        rows = exp_planar_gap(cfg.p_list, cfg.q, threads=state.threads, progress=progress)
    save_rows(rows, state.out, state.format, print_fct=logger.info)
    bad = [row["p"] for row in rows if row["opt_size"] != 2 or row["alg_size"] < row["p"] + 1]
    if bad:
        raise VerificationFailure(f"gadgets with p in {bad} do not show the expected gap")


@app.command(help="Random outerplanar graphs with exact optima.")
@_exit_codes
def random(
    ctx: typer.Context,
    n: int | None = typer.Option(None, "--n", help="Vertex count"),
    count: int | None = typer.Option(None, "--count", help="Number of instances"),
    keep_prob: float | None = typer.Option(None, "--keep-prob", help="Edge survival probability"),
) -> None:
    cfg = _experiment_config(ctx, "random", n=n, count=count, keep_prob=keep_prob)
    state = _state(ctx)
    seed = state.seed if _given(ctx, "seed") else cfg.seed
    progress, live = _progress(state, cfg.count, "Random")
    with live:
        run = exp_random(cfg.n, cfg.count, cfg.keep_prob, seed, threads=state.threads, progress=progress)
    if state.format == "csv":
        save_rows_with_summary(run.rows, run.aggregate, state.out, print_fct=logger.info)
    else:
        save_document({"rows": run.rows, "aggregate": run.aggregate}, state.out, print_fct=logger.info)
    logger.info(
        f"{run.aggregate['instances']} instances, max ratio {float(run.aggregate['max_ratio']):.6f}, "
        f"mean ratio {float(run.aggregate['mean_ratio']):.6f}"
    )
    if run.aggregate["violations"]:
        raise VerificationFailure(f"{run.aggregate['violations']} instances exceed the factor-5 guarantee")


def _given(ctx: typer.Context, param: str) -> bool:
    """Whether a top-level option was passed explicitly rather than left at its default."""
    source = ctx.parent.get_parameter_source(param) if ctx.parent is not None else None
    return source is not None and source.name != "DEFAULT"


if __name__ == "__main__":
    app()
