"""Kruskal's MST, which hands the replacement scan its sorted non-tree edges.

The scan in replacement_engine needs the non-tree edges in EdgeKey order.
Kruskal already walks every edge in that order, so splitting the walk into
accepted (tree) and rejected (non-tree) ids gives the scan its input for
free.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple

from graph_core import Graph, NotConnectedError, count_components, sort_edges


logger = logging.getLogger(__name__)


class BaselineDsu:
    """Conventional union-find: union by rank plus path compression.

    Used by Kruskal and as the macro level of the Gabow-Tarjan engine.
    It is NOT the static-union structure: sets here merge in any order and
    the representative carries no meaning beyond identity.
    """

    __slots__ = ("parent", "rank", "steps")

    def __init__(self, count: int):
        self.parent: List[int] = list(range(count))
        self.rank: List[int] = [0] * count
        self.steps = 0

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
            self.steps += 1
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of `a` and `b`; False if already together."""
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        self.link_roots(ra, rb)
        return True

    def link_roots(self, ra: int, rb: int) -> None:
        """Merge two distinct set roots by rank."""
        rank = self.rank
        if rank[ra] < rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if rank[ra] == rank[rb]:
            rank[ra] += 1


@dataclass(frozen=True)
class MstResult:
    tree_edges: FrozenSet[int]
    nontree_sorted: Tuple[int, ...]
    total_weight: int
    # Tree edge ids in EdgeKey order; the canonical report order.
    tree_sorted: Tuple[int, ...] = field(default=())


def kruskal(g: Graph) -> MstResult:
    """MST of a connected graph, unique under the EdgeKey total order.

    Raises NotConnectedError when fewer than n-1 edges are accepted.
    """
    order = sort_edges(g)
    dsu = BaselineDsu(g.n)
    find = dsu.find
    edges = g.edges
    tree: List[int] = []
    nontree: List[int] = []
    total = 0
    for eid in order:
        u, v, w, _ = edges[eid]
        ru = find(u)
        rv = find(v)
        if ru == rv:
            nontree.append(eid)
            continue
        dsu.link_roots(ru, rv)
        tree.append(eid)
        total += w

    if len(tree) < g.n - 1:
        raise NotConnectedError(count_components(g))

    logger.debug(
        "Kruskal accepted %d tree edges, %d non-tree, weight %d",
        len(tree), len(nontree), total,
    )
    return MstResult(
        tree_edges=frozenset(tree),
        nontree_sorted=tuple(nontree),
        total_weight=total,
        tree_sorted=tuple(tree),
    )
