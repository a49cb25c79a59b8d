"""Static-union engines for the replacement scan.

Each engine implements the same contract (see base.StaticUnion): find(v)
is the nearest unlinked ancestor-or-self of v in the union tree. The
registry maps the CLI's `--dsu` names to engine classes; the scan itself
never knows which engine it holds.

  gt   Gabow-Tarjan microsets: table lookups inside fragments, a
       conventional union-find across them. Linear overall.
  ref  path compression over a jump array. Simple; the cross-check.

Adding an engine means subclassing StaticUnion in its own module and
registering an EngineSpec for it here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence

from .base import ContractViolation, OpStats, StaticUnion
from .gabow_tarjan import GabowTarjanUnion
from .reference import ReferenceUnion


@dataclass(frozen=True)
class EngineSpec:
    name: str                                           # "gt", "ref"
    factory: Callable[[Sequence[int], int], StaticUnion]


_REGISTRY: Dict[str, EngineSpec] = {}


def register(spec: EngineSpec) -> None:
    _REGISTRY[spec.name] = spec


def get(name: str) -> EngineSpec:
    if name not in _REGISTRY:
        raise KeyError(f"unknown dsu engine: {name!r} (known: {sorted(_REGISTRY)})")
    return _REGISTRY[name]


def names() -> List[str]:
    return sorted(_REGISTRY)


def create(name: str, parent: Sequence[int], root: int) -> StaticUnion:
    """Build engine `name` over the union tree and makeset every vertex."""
    su = get(name).factory(parent, root)
    su.makeset_all()
    return su


for _spec in (
    EngineSpec("gt", GabowTarjanUnion),
    EngineSpec("ref", ReferenceUnion),
):
    register(_spec)


__all__ = [
    "ContractViolation",
    "EngineSpec",
    "GabowTarjanUnion",
    "OpStats",
    "ReferenceUnion",
    "StaticUnion",
    "create",
    "get",
    "names",
    "register",
]
