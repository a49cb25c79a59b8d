"""Reference engine: path compression over a jump array.

jump[v] == v while v is unlinked; link(v) points jump[v] at P[v]. find
follows jumps to the first self-loop and then compresses the walked path.
O(m log n) worst case, plenty for cross-checking the linear engine.
"""

from __future__ import annotations

from typing import Sequence

from .base import StaticUnion


class ReferenceUnion(StaticUnion):
    name = "ref"

    def __init__(self, parent: Sequence[int], root: int):
        super().__init__(parent, root)
        self.jump = list(range(len(parent)))

    def _reset(self, v: int) -> None:
        self.jump[v] = v

    def _reset_all(self) -> None:
        self.jump = list(range(self.n))

    def _find(self, v: int) -> int:
        jump = self.jump
        top = v
        hops = 0
        while jump[top] != top:
            top = jump[top]
            hops += 1
        while jump[v] != top:
            jump[v], v = top, jump[v]
        self.stats.steps += hops + 1
        return top

    def _link(self, v: int) -> None:
        self.jump[v] = self.union_tree_parent[v]
