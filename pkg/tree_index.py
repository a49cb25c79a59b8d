"""Rooted MST with parent array and IN/OUT step-counter labels.

The DFS counter is bumped on every edge step, down or up. A down-step into
v assigns IN[v]; an up-step out of v assigns OUT[v]. The root starts at
IN = 0 and, having no up-step, receives OUT = final counter + 1 so that it
dominates every other label.

With these labels, a is a proper ancestor of d iff IN[a] < IN[d] < OUT[a],
and intervals [IN, OUT] of two vertices are either disjoint or strictly
nested.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from graph_core import Graph
from mst_kruskal import MstResult


@dataclass(frozen=True)
class TreeIndex:
    root: int
    parent: Tuple[int, ...]
    parent_eid: Tuple[int, ...]   # -1 at the root
    in_label: Tuple[int, ...]
    out_label: Tuple[int, ...]
    depth: Tuple[int, ...]        # tests/oracles only
    order: Tuple[int, ...]        # DFS preorder

    @property
    def n(self) -> int:
        return len(self.parent)


def build_tree_index(g: Graph, mst: MstResult, root: int = 0) -> TreeIndex:
    """Root the MST at `root` and label it with an iterative DFS.

    Children are visited in ascending vertex id so labels are reproducible.
    The walk only records preorder, parents and depths; the step-counter
    labels follow from them in closed form. When v is entered at preorder
    position p, p down-steps and p - depth[v] up-steps have been taken, so
    IN[v] = 2p - depth[v]; the subtree below v costs 2(size[v] - 1) more
    steps, so OUT[v] = IN[v] + 2 size[v] - 1. For the root that is 2n - 1,
    the final counter plus one.
    """
    n = g.n
    if not (0 <= root < n):
        raise ValueError(f"root {root} out of range [0, {n})")

    # CSR adjacency of the tree, neighbors ascending.
    edges = g.edges
    tree = np.fromiter(mst.tree_sorted, dtype=np.int64, count=len(mst.tree_sorted))
    ends = np.array([edges[eid][:2] for eid in mst.tree_sorted], dtype=np.int64).reshape(-1, 2)
    src = np.concatenate((ends[:, 0], ends[:, 1]))
    dst = np.concatenate((ends[:, 1], ends[:, 0]))
    by = np.lexsort((dst, src))
    nbr = dst[by].tolist()
    nbr_eid = np.concatenate((tree, tree))[by].tolist()
    start = np.searchsorted(src[by], np.arange(n + 1)).tolist()

    parent = [-1] * n
    parent_eid = [-1] * n
    depth = [0] * n
    order: List[int] = []
    parent[root] = root

    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        p = parent[x]
        d = depth[x] + 1
        # pushed in descending id so the smallest child is entered first
        for i in range(start[x + 1] - 1, start[x] - 1, -1):
            y = nbr[i]
            if y != p:
                parent[y] = x
                parent_eid[y] = nbr_eid[i]
                depth[y] = d
                stack.append(y)

    size = [1] * n
    for v in reversed(order):
        if v != root:
            size[parent[v]] += size[v]

    pre = np.empty(n, dtype=np.int64)
    pre[np.array(order, dtype=np.int64)] = np.arange(n, dtype=np.int64)
    in_label = 2 * pre - np.array(depth, dtype=np.int64)
    out_label = in_label + 2 * np.array(size, dtype=np.int64) - 1

    return TreeIndex(
        root=root,
        parent=tuple(parent),
        parent_eid=tuple(parent_eid),
        in_label=tuple(in_label.tolist()),
        out_label=tuple(out_label.tolist()),
        depth=tuple(depth),
        order=tuple(order),
    )


def is_ancestor(ti: TreeIndex, a: int, d: int) -> bool:
    """Strict ancestry: is_ancestor(ti, v, v) is False."""
    return ti.in_label[a] < ti.in_label[d] < ti.out_label[a]
