"""Report building and rendering for `compute` and `oracle`.

TSV grammar, one record per line, single-space separated:

  GRAPH <n> <m>
  MST <weight>
  <u> <v> <w> <ru> <rv> <rw>        one per tree edge, EdgeKey order
  <u> <v> <w> BRIDGE
  VITAL <u> <v> <delta>  |  VITAL UNDEFINED bridges=<k>
  STATS finds=.. links=.. makesets=.. loops=.. steps=..   (only with --stats)

JSON is `ReportModel.model_dump_json()` and carries the same fields;
`parse_tsv` reads the TSV form back into a ReportModel.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from graph_core import Edge, Graph
from models import EdgeModel, ReplacementRowModel, ReportModel, StatsModel, VitalModel
from mst_kruskal import MstResult
from oracle import OracleResult
from replacement_engine import BRIDGE, sensitivity_rows
from services.analysis import Analysis


def _edge_model(e: Edge) -> EdgeModel:
    return EdgeModel(u=e.u, v=e.v, w=e.w)


def build_report(result: Analysis, with_stats: bool = False) -> ReportModel:
    g = result.graph
    rows: List[ReplacementRowModel] = []
    for row in sensitivity_rows(g, result.mst, result.table):
        repl = None if row.replacement is BRIDGE else _edge_model(g.edges[row.replacement])
        rows.append(ReplacementRowModel(
            edge=_edge_model(g.edges[row.tree_eid]),
            replacement=repl,
            delta=row.delta,
            weight_after_failure=row.weight_after_failure,
        ))

    vital = result.vital
    stats = StatsModel(**result.stats.as_dict()) if with_stats else None
    return ReportModel(
        n=g.n,
        m=g.m,
        mst_weight=result.mst.total_weight,
        rows=rows,
        vital=VitalModel(
            defined=vital.defined,
            edge=_edge_model(g.edges[vital.edge]) if vital.defined else None,
            delta=vital.delta,
            bridge_count=vital.bridge_count,
        ),
        stats=stats,
    )


def build_oracle_report(g: Graph, mst: MstResult, truth: OracleResult) -> ReportModel:
    rows: List[ReplacementRowModel] = []
    bridge_count = 0
    for eid in mst.tree_sorted:
        e = g.edges[eid]
        found = truth.replacements[eid]
        if found is None:
            bridge_count += 1
            rows.append(ReplacementRowModel(edge=_edge_model(e)))
            continue
        delta = found[1] - e.w
        rows.append(ReplacementRowModel(
            edge=_edge_model(e),
            replacement=_edge_model(g.edges[found[0]]),
            delta=delta,
            weight_after_failure=mst.total_weight + delta,
        ))

    if truth.vital is None:
        vital = VitalModel(defined=False, bridge_count=bridge_count)
    else:
        eid, delta = truth.vital
        vital = VitalModel(defined=True, edge=_edge_model(g.edges[eid]), delta=delta)
    return ReportModel(n=g.n, m=g.m, mst_weight=mst.total_weight, rows=rows, vital=vital)


def _row_line(e, r) -> str:
    if r is None:
        return f"{e.u} {e.v} {e.w} BRIDGE"
    return f"{e.u} {e.v} {e.w} {r.u} {r.v} {r.w}"


def _vital_line(vital, edge) -> str:
    if vital.defined:
        return f"VITAL {edge.u} {edge.v} {vital.delta}"
    return f"VITAL UNDEFINED bridges={vital.bridge_count}"


def _stats_line(s) -> str:
    return (
        f"STATS finds={s.finds} links={s.links} makesets={s.makesets} "
        f"loops={s.loop_iterations} steps={s.steps}"
    )


def render_tsv(report: ReportModel) -> str:
    lines = [f"GRAPH {report.n} {report.m}", f"MST {report.mst_weight}"]
    lines.extend(_row_line(row.edge, row.replacement) for row in report.rows)
    lines.append(_vital_line(report.vital, report.vital.edge))
    if report.stats is not None:
        lines.append(_stats_line(report.stats))
    return "\n".join(lines) + "\n"


def render_analysis_tsv(result: Analysis, with_stats: bool = False) -> str:
    """TSV straight from an Analysis; same text as
    render_tsv(build_report(result, with_stats)) without the per-row models."""
    g = result.graph
    edges = g.edges
    table = result.table
    lines = [f"GRAPH {g.n} {g.m}", f"MST {result.mst.total_weight}"]
    for eid in result.mst.tree_sorted:
        r = table.get(eid)
        lines.append(_row_line(edges[eid], None if r is BRIDGE else edges[r]))
    vital = result.vital
    lines.append(_vital_line(vital, edges[vital.edge] if vital.defined else None))
    if with_stats:
        lines.append(_stats_line(result.stats))
    return "\n".join(lines) + "\n"

def render_json(report: ReportModel) -> str:
    return report.model_dump_json() + "\n"


def render(report: ReportModel, fmt: str) -> str:
    return render_json(report) if fmt == "json" else render_tsv(report)


def _kv(tokens: List[str]) -> Dict[str, int]:
    return {k: int(v) for k, v in (t.split("=", 1) for t in tokens)}


def parse_tsv(text: str) -> ReportModel:
    """Inverse of render_tsv. Per-row delta and post-failure weight are
    recomputed from the edge weights and the MST weight."""
    n = m = mst_weight = 0
    rows: List[ReplacementRowModel] = []
    vital: Optional[VitalModel] = None
    stats: Optional[StatsModel] = None

    for raw in text.splitlines():
        parts = raw.split()
        if not parts:
            continue
        head = parts[0]
        if head == "GRAPH":
            n, m = int(parts[1]), int(parts[2])
        elif head == "MST":
            mst_weight = int(parts[1])
        elif head == "VITAL":
            if parts[1] == "UNDEFINED":
                vital = VitalModel(defined=False, bridge_count=_kv(parts[2:])["bridges"])
            else:
                u, v, delta = map(int, parts[1:4])
                vital = _vital_with_weight(rows, u, v, delta)
        elif head == "STATS":
            kv = _kv(parts[1:])
            stats = StatsModel(
                finds=kv["finds"], links=kv["links"], makesets=kv["makesets"],
                loop_iterations=kv["loops"], steps=kv["steps"],
            )
        else:
            u, v, w = map(int, parts[:3])
            edge = EdgeModel(u=u, v=v, w=w)
            if parts[3] == "BRIDGE":
                rows.append(ReplacementRowModel(edge=edge))
                continue
            ru, rv, rw = map(int, parts[3:6])
            rows.append(ReplacementRowModel(
                edge=edge,
                replacement=EdgeModel(u=ru, v=rv, w=rw),
                delta=rw - w,
                weight_after_failure=mst_weight + rw - w,
            ))

    if vital is None:
        raise ValueError("report has no VITAL line")
    return ReportModel(n=n, m=m, mst_weight=mst_weight, rows=rows, vital=vital, stats=stats)


def _vital_with_weight(rows: List[ReplacementRowModel], u: int, v: int, delta: int) -> VitalModel:
    # the VITAL line omits w; recover it from the matching tree-edge row
    for row in rows:
        e = row.edge
        if e.u == u and e.v == v and row.delta == delta:
            return VitalModel(defined=True, edge=EdgeModel(u=u, v=v, w=e.w), delta=delta)
    raise ValueError(f"VITAL edge {u} {v} matches no tree-edge row")
