"""Doubling-ladder benchmark behind `cli bench` and bench/bench_scaling.py.

Each rung generates a graph with n = 2^k and m = density * n, then times
the three phases separately (best of `repeats`): sort + Kruskal, tree
index + engine construction, and the replacement scan. Operation
counters come from the last repeat; the scan is deterministic so every
repeat counts the same.
"""

from __future__ import annotations

import logging
from time import perf_counter
from typing import Iterator, List, Optional

import dsu
from config import settings
from generators import generate
from graph_core import Graph
from models import BenchRowModel
from mst_kruskal import kruskal
from replacement_engine import find_replacement_edges
from tree_index import build_tree_index


logger = logging.getLogger(__name__)


def finds_bound(n: int, m: int) -> int:
    """Upper bound on find calls over a whole scan.

    Two finds per loop iteration, and a PathLabel call iterates at most once
    more than it links: 2(n-1) for the links, 2 per call over 2(m-n+1)
    calls, and n of headroom.
    """
    return 4 * (m - n + 1) + 2 * (n - 1) + n


def bench_graph(g: Graph, engine: str, repeats: int) -> BenchRowModel:
    best = [float("inf")] * 3
    stats = None
    for _ in range(repeats):
        t0 = perf_counter()
        mst = kruskal(g)
        t1 = perf_counter()
        ti = build_tree_index(g, mst, 0)
        su = dsu.create(engine, ti.parent, ti.root)
        t2 = perf_counter()
        find_replacement_edges(g, mst, ti, union=su)
        t3 = perf_counter()
        for i, took in enumerate((t1 - t0, t2 - t1, t3 - t2)):
            best[i] = min(best[i], took)
        stats = su.stats

    return BenchRowModel(
        n=g.n,
        m=g.m,
        sort_kruskal_s=best[0],
        index_s=best[1],
        scan_s=best[2],
        finds=stats.finds,
        links=stats.links,
        makesets=stats.makesets,
        loop_iterations=stats.loop_iterations,
        steps=stats.steps,
        finds_bound=finds_bound(g.n, g.m),
    )


def iter_ladder(
    family: str = "path-chords",
    k_min: int = 16,
    k_max: int = 21,
    density: int = 4,
    engine: Optional[str] = None,
    repeats: Optional[int] = None,
    seed: int = 0,
    wmin: int = 1,
    wmax: Optional[int] = None,
) -> Iterator[BenchRowModel]:
    engine = engine or settings.dsu
    repeats = repeats or settings.bench_repeats
    wmax = settings.wmax if wmax is None else wmax
    for k in range(k_min, k_max + 1):
        n = 1 << k
        m = None if family == "grid" else density * n
        g = generate(family, n, m, seed=seed + k, wmin=wmin, wmax=wmax)
        row = bench_graph(g, engine, repeats)
        logger.info(
            "bench k=%d n=%d m=%d scan=%.3fs steps=%d",
            k, row.n, row.m, row.scan_s, row.steps,
        )
        yield row


def run_ladder(**kwargs) -> List[BenchRowModel]:
    return list(iter_ladder(**kwargs))
