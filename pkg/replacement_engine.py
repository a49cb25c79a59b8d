"""Minimum-cost replacement edges for every MST edge, plus bridges and the
most vital edge.

The scan walks the non-tree edges in EdgeKey order. For each edge {s, t}
PathLabel climbs the fundamental cycle from each endpoint toward the LCA,
using IN/OUT labels to notice the LCA without computing it, and the
static-union structure to jump over tree edges that already have a
replacement. The first non-tree edge to reach a tree edge is its
replacement, and an assigned edge is never walked again.

Tree edges no non-tree edge reaches are exactly the bridges of the graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple, Union

import dsu
from config import settings
from dsu import ContractViolation, OpStats, StaticUnion
from graph_core import Graph, edge_key
from mst_kruskal import MstResult
from tree_index import TreeIndex


logger = logging.getLogger(__name__)


class Plan(str, Enum):
    ANC = "ANC"      # t is an ancestor of s
    LEFT = "LEFT"    # s precedes t in DFS order
    RIGHT = "RIGHT"  # t precedes s in DFS order


class Marker(str, Enum):
    BRIDGE = "BRIDGE"


BRIDGE = Marker.BRIDGE
_UNASSIGNED = -1

Entry = Union[int, Marker]


@dataclass(frozen=True)
class TraceEntry:
    """One PathLabel call: the non-tree edge, its plan (None when the
    ancestor guard returned immediately) and the tree edges it assigned."""

    eid: int
    plan: Optional[Plan]
    assigned: Tuple[int, ...]

    def render(self) -> str:
        plan = self.plan.value if self.plan is not None else "SKIP"
        return f"e={self.eid} plan={plan} assigned=[{','.join(map(str, self.assigned))}]"


class ReplacementTable:
    """Per-tree-edge replacement edge id, or BRIDGE.

    An entry is written at most once; a second write, or a write to a
    non-tree edge, raises ContractViolation. `finalize()` turns every
    still-unassigned tree edge into BRIDGE.
    """

    def __init__(self, m: int, tree_edges: Iterable[int]):
        self._tree: FrozenSet[int] = frozenset(tree_edges)
        self._entries: List[int] = [_UNASSIGNED] * m
        self._is_tree: List[bool] = [False] * m
        for eid in self._tree:
            self._is_tree[eid] = True
        self.assigned_count = 0
        self.finalized = False
        self.stats: Optional[OpStats] = None

    def assign(self, tree_eid: int, eid: int) -> None:
        if tree_eid < 0 or not self._is_tree[tree_eid]:
            raise ContractViolation(f"edge {tree_eid} is not a tree edge")
        if self._entries[tree_eid] != _UNASSIGNED:
            raise ContractViolation(
                f"tree edge {tree_eid} already has replacement {self._entries[tree_eid]}"
            )
        self._entries[tree_eid] = eid
        self.assigned_count += 1

    def finalize(self) -> "ReplacementTable":
        self.finalized = True
        return self

    def get(self, tree_eid: int) -> Entry:
        if not self._is_tree[tree_eid]:
            raise KeyError(f"edge {tree_eid} is not a tree edge")
        value = self._entries[tree_eid]
        if value == _UNASSIGNED:
            if not self.finalized:
                raise KeyError(f"tree edge {tree_eid} not assigned yet")
            return BRIDGE
        return value

    @property
    def tree_edges(self) -> FrozenSet[int]:
        return self._tree

    def bridge_edges(self) -> Set[int]:
        return {eid for eid in self._tree if self._entries[eid] == _UNASSIGNED}

    def as_dict(self) -> Dict[int, Optional[int]]:
        """{tree eid: replacement eid or None for BRIDGE}."""
        return {
            eid: (None if self._entries[eid] == _UNASSIGNED else self._entries[eid])
            for eid in self._tree
        }


@dataclass(frozen=True)
class VitalEdgeReport:
    defined: bool
    edge: Optional[int]
    delta: Optional[int]
    bridge_count: int


def _step_bounds(plan: Plan, ti: TreeIndex, v: int, k1: int, k2: int) -> Tuple[int, int]:
    if plan is Plan.LEFT:
        return ti.out_label[v], k2
    return k1, ti.in_label[v]


def path_label(
    ti: TreeIndex,
    su: StaticUnion,
    rt: ReplacementTable,
    s: int,
    t: int,
    e: int,
    trace: Optional[List[TraceEntry]] = None,
) -> Optional[Plan]:
    """Walk from s toward LCA(s, t), giving unassigned tree edges edge `e`.

    Returns the plan used, or None when s is an ancestor of t (the other
    orientation's call covers that path).
    """
    IN = ti.in_label
    OUT = ti.out_label

    if IN[s] < IN[t] < OUT[s]:
        if trace is not None:
            trace.append(TraceEntry(e, None, ()))
        return None

    if IN[t] < IN[s] < OUT[t]:
        plan, k1, k2 = Plan.ANC, IN[t], IN[s]
    elif IN[s] < IN[t]:
        plan, k1, k2 = Plan.LEFT, OUT[s], IN[t]
    else:
        plan, k1, k2 = Plan.RIGHT, OUT[t], IN[s]

    parent_eid = ti.parent_eid
    find = su.find
    step = _step_bounds
    assigned: List[int] = []
    iterations = 0
    v = s
    while k1 < k2:
        iterations += 1
        if find(v) == v:
            rt.assign(parent_eid[v], e)
            su.link(v)
            assigned.append(parent_eid[v])
        v = find(v)
        k1, k2 = step(plan, ti, v, k1, k2)
    su.stats.loop_iterations += iterations

    if trace is not None:
        trace.append(TraceEntry(e, plan, tuple(assigned)))
    return plan


def find_replacement_edges(
    g: Graph,
    mst: MstResult,
    ti: TreeIndex,
    early_exit: bool = False,
    *,
    engine: Optional[str] = None,
    union: Optional[StaticUnion] = None,
    trace: Optional[List[TraceEntry]] = None,
) -> ReplacementTable:
    """Assign every tree edge its EdgeKey-minimum replacement, or BRIDGE.

    Each non-tree edge {vi, vj} (stored vi < vj) gets PathLabel(vi, vj)
    then PathLabel(vj, vi). With `early_exit`, scanning stops as soon as
    n-1-k tree edges are assigned, k being the number of bridges; the
    resulting table is identical.

    `union` lets a caller supply (and afterwards inspect) the static-union
    instance; otherwise one is built with `engine` (default from config).
    """
    rt = ReplacementTable(g.m, mst.tree_edges)
    su = union if union is not None else dsu.create(engine or settings.dsu, ti.parent, ti.root)
    rt.stats = su.stats

    target = None
    if early_exit:
        target = g.n - 1 - len(bridges(g))

    edges = g.edges
    scanned = 0
    for eid in mst.nontree_sorted:
        if target is not None and rt.assigned_count >= target:
            logger.info(
                "Early exit after %d of %d non-tree edges (%d assigned)",
                scanned, len(mst.nontree_sorted), rt.assigned_count,
            )
            break
        e = edges[eid]
        path_label(ti, su, rt, e.u, e.v, eid, trace)
        path_label(ti, su, rt, e.v, e.u, eid, trace)
        scanned += 1

    return rt.finalize()


def bridges(g: Graph) -> Set[int]:
    """Edge ids whose removal disconnects g (iterative low-link DFS).

    The parent is skipped by edge id, not by vertex, so a parallel pair
    is never reported.
    """
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    cursor = [0] * n
    found: Set[int] = set()
    timer = 0

    for start in range(n):
        if disc[start] != -1:
            continue
        disc[start] = low[start] = timer
        timer += 1
        stack = [start]
        while stack:
            x = stack[-1]
            nbrs = adj[x]
            i = cursor[x]
            if i < len(nbrs):
                cursor[x] = i + 1
                y, eid = nbrs[i]
                if eid == parent_edge[x]:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    parent_edge[y] = eid
                    stack.append(y)
                elif disc[y] < low[x]:
                    low[x] = disc[y]
            else:
                stack.pop()
                if stack:
                    p = stack[-1]
                    if low[x] < low[p]:
                        low[p] = low[x]
                    if low[x] > disc[p]:
                        found.add(parent_edge[x])
    return found


def most_vital_edge(g: Graph, rt: ReplacementTable) -> VitalEdgeReport:
    """Tree edge maximizing w(replacement) - w(edge); ties go to the
    smaller EdgeKey. Undefined when any tree edge is a bridge, and on a
    single vertex (no tree edges at all)."""
    bridge_count = len(rt.bridge_edges())
    if bridge_count or not rt.tree_edges:
        return VitalEdgeReport(False, None, None, bridge_count)

    edges = g.edges
    best_delta = None
    best_key = None
    for eid, r in rt.as_dict().items():
        e = edges[eid]
        delta = edges[r].w - e.w
        if best_delta is not None and delta < best_delta:
            continue
        key = edge_key(e)
        if best_delta is None or delta > best_delta or key < best_key:
            best_delta = delta
            best_key = key
    best_eid = best_key[3]
    return VitalEdgeReport(True, best_eid, best_delta, 0)


@dataclass(frozen=True)
class SensitivityRow:
    tree_eid: int
    replacement: Entry
    delta: Optional[int]
    weight_after_failure: Optional[int]


def sensitivity_rows(g: Graph, mst: MstResult, rt: ReplacementTable) -> List[SensitivityRow]:
    """Per tree edge (EdgeKey order): its replacement, the weight increase,
    and the MST weight if that edge fails."""
    edges = g.edges
    rows: List[SensitivityRow] = []
    for eid in mst.tree_sorted:
        entry = rt.get(eid)
        if entry is BRIDGE:
            rows.append(SensitivityRow(eid, BRIDGE, None, None))
            continue
        delta = edges[entry].w - edges[eid].w
        rows.append(SensitivityRow(eid, entry, delta, mst.total_weight + delta))
    return rows
