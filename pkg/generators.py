"""Deterministic test-graph families for `gen`, `bench` and the test suites.

  random-connected  uniform random spanning tree (Pruefer decoding) plus
                    distinct extra edges chosen uniformly; simple graph,
                    so m <= n(n-1)/2. Edge order is shuffled.
  path-chords       the path 0-1-...-(n-1) plus m-n+1 uniform chords
                    (parallel chords allowed).
  grid              ceil(sqrt(n)) columns, row-major; m is implied.
  tree              uniform random spanning tree; m = n-1.

Weights are uniform integers in [wmin, wmax], duplicates allowed. A fixed
seed always yields the same graph.
"""

from __future__ import annotations

import heapq
import logging
import math
from typing import Callable, Dict, List, Optional, Set, Tuple

import numpy as np

from graph_core import Graph


logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class InfeasibleGeneratorError(Exception):
    """The requested (family, n, m) combination cannot be built.

    Exit code 4 from the CLI.
    """

    exit_code = 4


def random_tree_pairs(n: int, rng: np.random.Generator) -> List[Pair]:
    """Edges of a uniformly random labelled tree on n vertices."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    pairs: List[Pair] = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        pairs.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    pairs.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return pairs


def _canon(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def _extra_simple_pairs(n: int, count: int, taken: Set[Pair], rng: np.random.Generator) -> List[Pair]:
    free = n * (n - 1) // 2 - len(taken)
    if count > free:
        raise InfeasibleGeneratorError(f"only {free} free vertex pairs, need {count}")
    if count == 0:
        return []
    if count * 2 > free:
        candidates = [
            (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in taken
        ]
        picks = rng.choice(len(candidates), size=count, replace=False)
        return [candidates[i] for i in picks.tolist()]

    chosen: List[Pair] = []
    seen = set(taken)
    while len(chosen) < count:
        batch = max(16, 2 * (count - len(chosen)))
        us = rng.integers(0, n, size=batch).tolist()
        vs = rng.integers(0, n, size=batch).tolist()
        for u, v in zip(us, vs):
            if u == v:
                continue
            pair = _canon(u, v)
            if pair in seen:
                continue
            seen.add(pair)
            chosen.append(pair)
            if len(chosen) == count:
                break
    return chosen


def _weights(rng: np.random.Generator, count: int, wmin: int, wmax: int) -> List[int]:
    return rng.integers(wmin, wmax, size=count, dtype=np.int64, endpoint=True).tolist()


def _build(n: int, pairs: List[Pair], rng: np.random.Generator, wmin: int, wmax: int) -> Graph:
    weights = _weights(rng, len(pairs), wmin, wmax)
    return Graph.from_edges(n, ((u, v, w) for (u, v), w in zip(pairs, weights)))


def gen_random_connected(n: int, m: Optional[int], rng: np.random.Generator, wmin: int, wmax: int) -> Graph:
    m = n - 1 if m is None else m
    if m < n - 1:
        raise InfeasibleGeneratorError(f"random-connected needs m >= n-1, got n={n} m={m}")
    tree = [_canon(u, v) for u, v in random_tree_pairs(n, rng)]
    extra = _extra_simple_pairs(n, m - len(tree), set(tree), rng)
    pairs = tree + extra
    order = rng.permutation(len(pairs)).tolist()
    return _build(n, [pairs[i] for i in order], rng, wmin, wmax)


def gen_path_chords(n: int, m: Optional[int], rng: np.random.Generator, wmin: int, wmax: int) -> Graph:
    m = n - 1 if m is None else m
    chords = m - (n - 1)
    if chords < 0:
        raise InfeasibleGeneratorError(f"path-chords needs m >= n-1, got n={n} m={m}")
    if chords and n < 2:
        raise InfeasibleGeneratorError("path-chords cannot add chords on one vertex")
    pairs: List[Pair] = [(i, i + 1) for i in range(n - 1)]
    if chords:
        us = rng.integers(0, n, size=chords)
        # offset in [1, n-1] keeps v != u
        vs = (us + rng.integers(1, n, size=chords)) % n
        lo = np.minimum(us, vs).tolist()
        hi = np.maximum(us, vs).tolist()
        pairs.extend(zip(lo, hi))
    return _build(n, pairs, rng, wmin, wmax)


def grid_pairs(n: int) -> List[Pair]:
    cols = max(1, math.ceil(math.sqrt(n)))
    pairs: List[Pair] = []
    for i in range(n):
        if (i + 1) % cols and i + 1 < n:
            pairs.append((i, i + 1))
        if i + cols < n:
            pairs.append((i, i + cols))
    return pairs


def gen_grid(n: int, m: Optional[int], rng: np.random.Generator, wmin: int, wmax: int) -> Graph:
    pairs = grid_pairs(n)
    if m is not None and m != len(pairs):
        raise InfeasibleGeneratorError(f"grid on n={n} has exactly {len(pairs)} edges, got m={m}")
    return _build(n, pairs, rng, wmin, wmax)


def gen_tree(n: int, m: Optional[int], rng: np.random.Generator, wmin: int, wmax: int) -> Graph:
    if m is not None and m != n - 1:
        raise InfeasibleGeneratorError(f"tree on n={n} has exactly {n - 1} edges, got m={m}")
    return _build(n, [_canon(u, v) for u, v in random_tree_pairs(n, rng)], rng, wmin, wmax)


Family = Callable[[int, Optional[int], np.random.Generator, int, int], Graph]

FAMILIES: Dict[str, Family] = {
    "random-connected": gen_random_connected,
    "path-chords": gen_path_chords,
    "grid": gen_grid,
    "tree": gen_tree,
}


def generate(
    family: str,
    n: int,
    m: Optional[int] = None,
    seed: int = 0,
    wmin: int = 1,
    wmax: int = 100,
) -> Graph:
    if family not in FAMILIES:
        raise KeyError(f"unknown family: {family!r} (known: {sorted(FAMILIES)})")
    if n < 1:
        raise InfeasibleGeneratorError(f"n must be >= 1, got {n}")
    if wmin > wmax:
        raise InfeasibleGeneratorError(f"empty weight range [{wmin}, {wmax}]")
    rng = np.random.default_rng(seed)
    g = FAMILIES[family](n, m, rng, wmin, wmax)
    logger.info("Generated %s graph n=%d m=%d seed=%d", family, g.n, g.m, seed)
    return g
