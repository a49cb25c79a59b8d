"""Interface shared by the static-union engines.

Contract (engine independent): find(v) is the nearest ancestor-or-self u
of v in the union tree with linked[u] false. The root is never linked, so
such a u always exists. link(v) contracts the tree edge {v, P[v]}; the
merged set keeps P[v]'s label.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, asdict
from typing import Dict, List, Sequence


class ContractViolation(AssertionError):
    """A static-union or replacement-table precondition was broken.

    Raised explicitly (never through a bare `assert`) so running under
    `python -O` keeps the checks. The replacement scan's correctness
    depends on these preconditions, so a violation is always a bug in the
    caller, not bad input.
    """


@dataclass
class OpStats:
    finds: int = 0
    links: int = 0
    makesets: int = 0
    loop_iterations: int = 0
    # Engine-internal elementary steps (jump-array hops, table lookups,
    # macro union-find hops); what the linearity check measures.
    steps: int = 0

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)


class StaticUnion(ABC):
    """Disjoint sets over the vertices of a union tree known in advance."""

    name: str = ""

    def __init__(self, parent: Sequence[int], root: int):
        self.union_tree_parent = parent
        self.root = root
        n = len(parent)
        self.linked: List[bool] = [False] * n
        self._made: List[bool] = [False] * n
        self.stats = OpStats()

    @property
    def n(self) -> int:
        return len(self.union_tree_parent)

    def makeset(self, v: int) -> None:
        if self._made[v]:
            raise ContractViolation(f"makeset({v}) called twice")
        self._made[v] = True
        self.linked[v] = False
        self._reset(v)
        self.stats.makesets += 1

    def makeset_all(self) -> None:
        """makeset every vertex in one pass."""
        if any(self._made):
            raise ContractViolation("makeset_all() after makeset() was already called")
        n = self.n
        self._made = [True] * n
        self.linked = [False] * n
        self._reset_all()
        self.stats.makesets += n

    def find(self, v: int) -> int:
        self.stats.finds += 1
        return self._find(v)

    def link(self, v: int) -> None:
        if v == self.root:
            raise ContractViolation("the union-tree root cannot be linked")
        if not self._made[v]:
            raise ContractViolation(f"link({v}) before makeset({v})")
        if self.linked[v]:
            # find(v) == v iff v is unlinked, so this is the "v must be
            # its set's label" precondition.
            raise ContractViolation(f"link({v}): {v} is not its set's label")
        self.linked[v] = True
        self._link(v)
        self.stats.links += 1

    @abstractmethod
    def _reset(self, v: int) -> None:
        """Put v back into its singleton state."""

    def _reset_all(self) -> None:
        for v in range(self.n):
            self._reset(v)

    @abstractmethod
    def _find(self, v: int) -> int:
        ...

    @abstractmethod
    def _link(self, v: int) -> None:
        ...
