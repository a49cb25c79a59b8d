"""repledge command line.

    python -m cli compute graph.txt [--root R] [--dsu gt|ref] [--early-exit]
                                    [--format tsv|json] [--stats] [--trace]
    python -m cli oracle  graph.txt [--root R] [--format tsv|json]
    python -m cli verify  graph.txt [--root R] [--early-exit]
    python -m cli gen     --family F --n N [--m M] [--seed S] [--wmin A] [--wmax B]
    python -m cli bench   [--family F] [--k-min K] [--k-max K] [--density D]
                          [--repeats R] [--dsu gt|ref] [--seed S]

An input path of '-' reads standard input. Reports go to stdout; logs,
traces and error messages go to stderr.

Exit codes: 0 ok, 1 parse error, 2 graph not connected, 3 verification
mismatch, 4 infeasible generator request, 64 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

import dsu
from config import settings
from generators import FAMILIES, InfeasibleGeneratorError, generate
from graph_core import Graph, GraphParseError, NotConnectedError, format_graph, parse_graph
from models import RunConfig
from mst_kruskal import kruskal
from oracle import run_oracle
from services.analysis import VerificationMismatch, analyze, verify
from services.benchmark import iter_ladder
from services.report import build_oracle_report, build_report, render, render_analysis_tsv


logger = logging.getLogger(__name__)

EXIT_USAGE = 64


class UsageError(Exception):
    """Bad flags or flag combinations. Exit code 64."""

    exit_code = EXIT_USAGE


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on its own, which would read as "not connected"
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="repledge", description="Minimum-cost replacement edges for MST edges.")
    p.add_argument("command", choices=["compute", "oracle", "verify", "gen", "bench"])
    p.add_argument("input", nargs="?", default=None, help="Graph file, or '-' for stdin")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--dsu", default=settings.dsu, help=f"Static-union engine {dsu.names()}")
    p.add_argument("--early-exit", action="store_true")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", default=None, help=f"One of {sorted(FAMILIES)}")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=settings.wmax)
    p.add_argument("--k-min", type=int, default=16)
    p.add_argument("--k-max", type=int, default=21)
    p.add_argument("--density", type=int, default=4)
    p.add_argument("--repeats", type=int, default=settings.bench_repeats)
    p.add_argument("--log-level", default=settings.log_level, type=str.upper)
    return p


def parse_config(argv: Optional[List[str]]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    try:
        return RunConfig(**vars(ns))
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(x) for x in first["loc"]) or "arguments"
        raise UsageError(f"{where}: {first['msg']}") from exc


def _read_graph(cfg: RunConfig) -> Graph:
    if str(cfg.input) == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            data = cfg.input.read_bytes()
        except OSError as exc:
            raise GraphParseError(f"cannot read {cfg.input}: {exc.strerror}", 0) from exc
    g = parse_graph(data)
    if cfg.root >= g.n:
        raise UsageError(f"--root {cfg.root} out of range for n={g.n}")
    return g


def _family(cfg: RunConfig, default: str) -> str:
    family = cfg.family or default
    if family not in FAMILIES:
        raise UsageError(f"unknown family: {family!r} (known: {sorted(FAMILIES)})")
    return family


def cmd_compute(cfg: RunConfig) -> int:
    g = _read_graph(cfg)
    result = analyze(g, root=cfg.root, engine=cfg.dsu, early_exit=cfg.early_exit, trace=cfg.trace)
    if result.trace is not None:
        for entry in result.trace:
            print(entry.render(), file=sys.stderr)
    if cfg.format == "tsv":
        sys.stdout.write(render_analysis_tsv(result, with_stats=cfg.stats))
    else:
        sys.stdout.write(render(build_report(result, with_stats=cfg.stats), "json"))
    return 0


def cmd_oracle(cfg: RunConfig) -> int:
    g = _read_graph(cfg)
    mst = kruskal(g)
    truth = run_oracle(g, mst)
    sys.stdout.write(render(build_oracle_report(g, mst, truth), cfg.format))
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    g = _read_graph(cfg)
    truth = verify(g, root=cfg.root, early_exit=cfg.early_exit)
    print(f"OK engines={','.join(dsu.names())} tree_edges={len(truth.replacements)}")
    return 0


def cmd_gen(cfg: RunConfig) -> int:
    family = _family(cfg, "random-connected")
    g = generate(family, cfg.n, cfg.m, seed=cfg.seed, wmin=cfg.wmin, wmax=cfg.wmax)
    sys.stdout.write(format_graph(g))
    return 0


def cmd_bench(cfg: RunConfig) -> int:
    family = _family(cfg, "path-chords")
    for row in iter_ladder(
        family=family,
        k_min=cfg.k_min,
        k_max=cfg.k_max,
        density=cfg.density,
        engine=cfg.dsu,
        repeats=cfg.repeats,
        seed=cfg.seed,
        wmin=cfg.wmin,
        wmax=cfg.wmax,
    ):
        print(row.model_dump_json(), flush=True)
    return 0


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "compute": cmd_compute,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
}

_DOMAIN_ERRORS = (
    UsageError,
    GraphParseError,
    NotConnectedError,
    VerificationMismatch,
    InfeasibleGeneratorError,
)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"repledge: {exc}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, cfg.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return COMMANDS[cfg.command](cfg)
    except _DOMAIN_ERRORS as exc:
        logger.debug("Command %s failed", cfg.command, exc_info=True)
        print(f"repledge: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
