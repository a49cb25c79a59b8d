"""End-to-end pipeline: Kruskal, tree index, replacement scan, vital edge.

`analyze` is what `compute` and `bench` drive; `verify` runs every
registered static-union engine and checks each table against the oracle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from time import perf_counter
from typing import Dict, List, Optional

import dsu
from config import settings
from dsu import ContractViolation, OpStats
from graph_core import Graph, edge_key
from mst_kruskal import MstResult, kruskal
from oracle import OracleResult, run_oracle
from replacement_engine import (
    ReplacementTable,
    TraceEntry,
    VitalEdgeReport,
    find_replacement_edges,
    most_vital_edge,
)
from tree_index import TreeIndex, build_tree_index


logger = logging.getLogger(__name__)


class VerificationMismatch(Exception):
    """Engine output disagrees with the oracle. Exit code 3.

    `tree_eid` is the first differing tree edge in EdgeKey order, or None
    when the engine broke a contract before producing a table (or when only
    the vital edge differs).
    """

    exit_code = 3

    def __init__(self, engine: str, tree_eid: Optional[int], expected, actual, detail: str = ""):
        where = f"tree edge {tree_eid}" if tree_eid is not None else "report"
        msg = f"[{engine}] mismatch at {where}: oracle={expected} engine={actual}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.engine = engine
        self.tree_eid = tree_eid
        self.expected = expected
        self.actual = actual


@dataclass
class Analysis:
    graph: Graph
    mst: MstResult
    index: TreeIndex
    table: ReplacementTable
    vital: VitalEdgeReport
    stats: OpStats
    timings_s: Dict[str, float] = field(default_factory=dict)
    trace: Optional[List[TraceEntry]] = None


def analyze(
    g: Graph,
    root: int = 0,
    engine: Optional[str] = None,
    early_exit: bool = False,
    trace: bool = False,
) -> Analysis:
    """Run the whole pipeline. Raises NotConnectedError for disconnected g."""
    engine = engine or settings.dsu
    t0 = perf_counter()
    mst = kruskal(g)
    t1 = perf_counter()
    ti = build_tree_index(g, mst, root)
    su = dsu.create(engine, ti.parent, ti.root)
    t2 = perf_counter()
    entries: Optional[List[TraceEntry]] = [] if trace else None
    table = find_replacement_edges(g, mst, ti, early_exit, union=su, trace=entries)
    t3 = perf_counter()
    vital = most_vital_edge(g, table)

    timings = {
        "sort_kruskal_s": t1 - t0,
        "index_s": t2 - t1,
        "scan_s": t3 - t2,
    }
    logger.info(
        "Pipeline n=%d m=%d engine=%s: kruskal %.3fs, index %.3fs, scan %.3fs",
        g.n, g.m, engine, timings["sort_kruskal_s"], timings["index_s"], timings["scan_s"],
    )
    return Analysis(g, mst, ti, table, vital, su.stats, timings, entries)


def _first_difference(g: Graph, expected: Dict[int, Optional[int]], actual: Dict[int, Optional[int]]) -> Optional[int]:
    for eid in sorted(expected, key=lambda t: edge_key(g.edges[t])):
        if expected[eid] != actual.get(eid):
            return eid
    return None


def verify(g: Graph, root: int = 0, early_exit: bool = False) -> OracleResult:
    """Check every engine against the oracle; raise VerificationMismatch on
    the first disagreement. Returns the oracle result on success."""
    mst = kruskal(g)
    truth = run_oracle(g, mst)
    expected = truth.as_table()

    for engine in dsu.names():
        try:
            result = analyze(g, root=root, engine=engine, early_exit=early_exit)
        except ContractViolation as exc:
            raise VerificationMismatch(engine, None, "-", "-", f"contract violation: {exc}") from exc

        actual = result.table.as_dict()
        diff = _first_difference(g, expected, actual)
        if diff is not None:
            raise VerificationMismatch(engine, diff, expected[diff], actual.get(diff))

        vital = result.vital
        engine_vital = (vital.edge, vital.delta) if vital.defined else None
        if engine_vital != truth.vital:
            raise VerificationMismatch(engine, None, truth.vital, engine_vital, "most vital edge")
        logger.info("Engine %s agrees with the oracle on %d tree edges", engine, len(expected))
    return truth
