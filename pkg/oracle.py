"""Brute-force ground truth, written from first principles.

Shares no code with TreeIndex labels, the static-union engines or
PathLabel. It takes Kruskal's output as the tree to test against, and
`_mst_weight_without` runs its own Kruskal.
Everything is O(n*m) or worse, which is fine at test scale.

  oracle_replacements       cut enumeration: drop a tree edge, two-colour
                            the halves, take the lightest crossing edge.
  oracle_swap_replacements  even dumber: try every swap T - e + f and keep
                            the lightest f that leaves a spanning tree.
  oracle_vital              recompute the whole MST without each tree edge.
  oracle_find               walk parents until an unlinked vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from graph_core import Edge, Graph, edge_key
from mst_kruskal import MstResult


@dataclass
class OracleResult:
    # tree eid -> (replacement eid, replacement weight), None for BRIDGE
    replacements: Dict[int, Optional[Tuple[int, int]]] = field(default_factory=dict)
    vital: Optional[Tuple[int, int]] = None

    def as_table(self) -> Dict[int, Optional[int]]:
        return {t: (None if r is None else r[0]) for t, r in self.replacements.items()}


def _tree_adjacency(g: Graph, tree_edges: Sequence[int]) -> List[List[Tuple[int, int]]]:
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid in tree_edges:
        e = g.edges[eid]
        adj[e.u].append((e.v, eid))
        adj[e.v].append((e.u, eid))
    return adj


def _side_of(adj: List[List[Tuple[int, int]]], start: int, n: int, cut_eid: int) -> List[bool]:
    side = [False] * n
    side[start] = True
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y, eid in adj[x]:
            if eid != cut_eid and not side[y]:
                side[y] = True
                queue.append(y)
    return side


def oracle_replacements(g: Graph, mst: MstResult) -> OracleResult:
    """Replacement per tree edge by enumerating its cut."""
    tree = sorted(mst.tree_edges)
    tree_set = set(tree)
    nontree = sorted((e for e in g.edges if e.eid not in tree_set), key=edge_key)
    adj = _tree_adjacency(g, tree)

    result = OracleResult()
    for eid in tree:
        side = _side_of(adj, g.edges[eid].u, g.n, eid)
        best: Optional[Edge] = None
        for f in nontree:
            if side[f.u] != side[f.v]:
                best = f
                break
        result.replacements[eid] = None if best is None else (best.eid, best.w)
    return result


def _is_spanning_tree(n: int, edges: Sequence[Edge]) -> bool:
    if len(edges) != n - 1:
        return False
    adj: List[List[int]] = [[] for _ in range(n)]
    for e in edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def oracle_swap_replacements(g: Graph, mst: MstResult) -> OracleResult:
    """Replacement per tree edge by testing every single-edge swap."""
    tree = sorted(mst.tree_edges)
    tree_set = set(tree)
    result = OracleResult()
    for eid in tree:
        rest = [g.edges[t] for t in tree if t != eid]
        best: Optional[Edge] = None
        for f in g.edges:
            if f.eid in tree_set:
                continue
            if best is not None and edge_key(f) >= edge_key(best):
                continue
            if _is_spanning_tree(g.n, rest + [f]):
                best = f
        result.replacements[eid] = None if best is None else (best.eid, best.w)
    return result


def _mst_weight_without(g: Graph, skip_eid: int) -> Optional[int]:
    """MST weight of g minus one edge, or None if that disconnects g."""
    parent = list(range(g.n))

    def root(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total = 0
    accepted = 0
    for e in sorted(g.edges, key=edge_key):
        if e.eid == skip_eid:
            continue
        ru, rv = root(e.u), root(e.v)
        if ru != rv:
            parent[ru] = rv
            total += e.w
            accepted += 1
    return total if accepted == g.n - 1 else None


def oracle_vital(g: Graph, mst: MstResult) -> Optional[Tuple[int, int]]:
    """(tree eid, weight increase) of the most vital edge, None if any tree
    edge is a bridge (or there are no tree edges). Ties: smaller EdgeKey."""
    base = _mst_weight_without(g, -1)
    if base is None or not mst.tree_edges:
        return None
    best: Optional[Tuple[int, Tuple[int, int, int, int]]] = None
    best_eid = -1
    for eid in mst.tree_edges:
        weight = _mst_weight_without(g, eid)
        if weight is None:
            return None
        rank = (-(weight - base), edge_key(g.edges[eid]))
        if best is None or rank < best:
            best = rank
            best_eid = eid
    return best_eid, -best[0]


def oracle_find(parent: Sequence[int], linked: Sequence[bool], v: int) -> int:
    """First unlinked vertex on v, P[v], P[P[v]], ..."""
    while linked[v]:
        v = parent[v]
    return v


def run_oracle(g: Graph, mst: MstResult) -> OracleResult:
    result = oracle_replacements(g, mst)
    result.vital = oracle_vital(g, mst)
    return result


def oracle_bridges(g: Graph) -> Set[int]:
    """Remove-and-check bridge oracle."""
    found: Set[int] = set()
    for e in g.edges:
        rest = [f for f in g.edges if f.eid != e.eid]
        adj: List[List[int]] = [[] for _ in range(g.n)]
        for f in rest:
            adj[f.u].append(f.v)
            adj[f.v].append(f.u)
        seen = {e.u}
        stack = [e.u]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if e.v not in seen:
            found.add(e.eid)
    return found
