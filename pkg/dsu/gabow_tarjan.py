"""Linear-time static union-find over a known union tree (microset method).

The union tree is cut into microsets: connected fragments of at most b
vertices, packed greedily bottom-up. Inside a fragment each vertex has a
local index with parents numbered before children, so the vertices on the
path from a vertex up to its fragment top carry increasing indices.

  anc_mask[v]   local bits of v and its in-fragment ancestors
  mark[f]       local bits of the linked vertices of fragment f

A local find is then a single lookup: the deepest unlinked ancestor-or-self
is the highest bit of anc_mask[v] & ~mark[f], read from a precomputed
2^b answer table.

When a fragment is exhausted along the path (everything from the entry
vertex to the fragment top is linked), the search continues at the
parent of the fragment top, a "boundary" vertex. An exhausted boundary
vertex stays exhausted forever since links are never undone, so the
engine buries it into the boundary vertex above with a conventional
union-find over boundary vertices. That macro structure carries a label
per set: the one live boundary vertex the buried chain leads to.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

import numpy as np

from config import clamp_microset_bits, settings
from mst_kruskal import BaselineDsu
from .base import StaticUnion


logger = logging.getLogger(__name__)


def answer_table(bits: int) -> List[int]:
    """answer[p] = index of the highest set bit of p; answer[0] = -1."""
    size = 1 << bits
    table = np.full(size, -1, dtype=np.int64)
    if size > 1:
        table[1:] = np.floor(np.log2(np.arange(1, size))).astype(np.int64)
    return table.tolist()


def _preorder(root: int, children: List[List[int]]) -> List[int]:
    order: List[int] = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(children[v]))
    return order


class GabowTarjanUnion(StaticUnion):
    name = "gt"

    def __init__(self, parent: Sequence[int], root: int, microset_bits: Optional[int] = None):
        super().__init__(parent, root)
        self.microset_bits = clamp_microset_bits(
            microset_bits if microset_bits is not None else settings.microset_bits
        )
        self._pack()
        self._answer = answer_table(self.microset_bits)
        self._macro = BaselineDsu(self.n)
        self._macro_label = list(range(self.n))

    # -- construction --------------------------------------------------

    def _pack(self) -> None:
        n = self.n
        b = self.microset_bits
        parent = self.union_tree_parent
        root = self.root

        children: List[List[int]] = [[] for _ in range(n)]
        for v in range(n):
            if v != root:
                children[parent[v]].append(v)
        order = _preorder(root, children)
        if len(order) != n:
            raise ValueError("union tree parent array does not describe one tree")

        pending = [1] * n
        absorbed = [False] * n
        for v in reversed(order):
            kids = children[v]
            if not kids:
                continue
            if len(kids) == 1:
                c = kids[0]
                if pending[c] < b:
                    absorbed[c] = True
                    pending[v] = 1 + pending[c]
                continue
            total = 1
            for c in sorted(kids, key=pending.__getitem__):
                if total + pending[c] <= b:
                    absorbed[c] = True
                    total += pending[c]
            pending[v] = total

        frag_of = [0] * n
        bit = [0] * n
        anc_mask = [0] * n
        frag_top: List[int] = []
        members: List[List[int]] = []
        for v in order:
            if v == root or not absorbed[v]:
                f = len(frag_top)
                frag_top.append(v)
                members.append([v])
                frag_of[v] = f
                bit[v] = 1
                anc_mask[v] = 1
            else:
                p = parent[v]
                f = frag_of[p]
                frag_of[v] = f
                bit[v] = 1 << len(members[f])
                members[f].append(v)
                anc_mask[v] = anc_mask[p] | bit[v]

        self._frag_of = frag_of
        self._bit = bit
        self._anc_mask = anc_mask
        self._frag_top = frag_top
        self._members = members
        self._mark = [0] * len(frag_top)
        logger.debug(
            "Packed %d vertices into %d microsets (b=%d)", n, len(frag_top), b
        )

    @property
    def microset_count(self) -> int:
        return len(self._frag_top)

    def microset_members(self, f: int) -> List[int]:
        return list(self._members[f])

    # -- operations ----------------------------------------------------

    def _reset(self, v: int) -> None:
        self._mark[self._frag_of[v]] &= ~self._bit[v]

    def _reset_all(self) -> None:
        self._mark = [0] * len(self._frag_top)

    def _link(self, v: int) -> None:
        self._mark[self._frag_of[v]] |= self._bit[v]

    def find(self, v: int) -> int:
        # StaticUnion.find with the in-fragment lookup inlined
        stats = self.stats
        stats.finds += 1
        stats.steps += 1
        f = self._frag_of[v]
        pattern = self._anc_mask[v] & ~self._mark[f]
        if pattern:
            return self._members[f][self._answer[pattern]]
        return self._climb(f)

    def _find(self, v: int) -> int:
        f = self._frag_of[v]
        pattern = self._anc_mask[v] & ~self._mark[f]
        self.stats.steps += 1
        if pattern:
            return self._members[f][self._answer[pattern]]
        return self._climb(f)

    def _climb(self, f: int) -> int:
        """Continue above exhausted fragment f through the boundary vertices."""
        stats = self.stats
        frag_of = self._frag_of
        mark = self._mark
        anc_mask = self._anc_mask
        members = self._members
        answer = self._answer
        macro = self._macro
        label = self._macro_label
        parent = self.union_tree_parent
        frag_top = self._frag_top
        macro_before = macro.steps

        x = parent[frag_top[f]]
        while True:
            x = label[macro.find(x)]
            f = frag_of[x]
            pattern = anc_mask[x] & ~mark[f]
            stats.steps += 1
            if pattern:
                stats.steps += macro.steps - macro_before
                return members[f][answer[pattern]]
            # x and its whole path to the fragment top are linked.
            y = parent[frag_top[f]]
            above = label[macro.find(y)]
            macro.union(x, y)
            label[macro.find(x)] = above
            x = above
