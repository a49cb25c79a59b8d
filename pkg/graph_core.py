"""Graph representation, input parsing and the canonical edge order.

Input format (UTF-8 text, whitespace separated):

    # optional comment lines
    n m
    u v w        (exactly m lines, 0-based vertex ids, integer weight)

Edges are stored canonically with u < v. Self-loops are dropped (and
counted) because they close no fundamental cycle; parallel edges are kept
because they are legitimate replacement candidates. Edge ids are dense
over the kept edges, in input order.

The single total order used everywhere (Kruskal, the non-tree scan, the
oracles, report ordering) is EdgeKey = (w, u, v, eid).
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import chain
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np


logger = logging.getLogger(__name__)

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


class GraphParseError(Exception):
    """Raised when graph input text cannot be turned into a Graph.

    Every subclass carries the 1-based `line` the problem was found on
    (0 when the problem is about the file as a whole, e.g. a missing
    header). The CLI maps all of them to exit code 1.
    """

    exit_code = 1

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class MalformedHeaderError(GraphParseError):
    """The "n m" header is missing, short, non-integer or negative."""


class VertexOutOfRangeError(GraphParseError):
    """An edge endpoint lies outside [0, n)."""

    def __init__(self, vertex: int, n: int, line: int):
        super().__init__(f"vertex {vertex} out of range [0, {n})", line)
        self.vertex = vertex


class EdgeCountMismatchError(GraphParseError):
    """The number of edge lines differs from the header's m."""

    def __init__(self, expected: int, actual: int, line: int):
        super().__init__(f"expected {expected} edge lines, found {actual}", line)
        self.expected = expected
        self.actual = actual


class WeightOverflowError(GraphParseError):
    """A weight does not fit in a signed 64-bit integer."""


class InvalidTokenError(GraphParseError):
    """A token is not an integer (floats included) or a line is short."""


class NotConnectedError(Exception):
    """Raised by pipeline entry points when the graph is not connected.

    `components` is the number of connected components found. Exit code 2.
    """

    exit_code = 2

    def __init__(self, components: int):
        super().__init__(f"graph is not connected ({components} components)")
        self.components = components


class Edge(NamedTuple):
    u: int
    v: int
    w: int
    eid: int


def edge_key(edge: Edge) -> Tuple[int, int, int, int]:
    return (edge.w, edge.u, edge.v, edge.eid)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected weighted multigraph over vertices [0, n).

    `self_loops` is the number of self-loop lines dropped at ingestion.
    Adjacency is built on first use and cached; entries are
    (neighbor, eid), one per endpoint of every edge.
    """

    n: int
    edges: Tuple[Edge, ...]
    self_loops: int = 0

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.u].append((e.v, e.eid))
            adj[e.v].append((e.u, e.eid))
        return tuple(tuple(a) for a in adj)

    @classmethod
    def from_edges(cls, n: int, triples: Iterable[Tuple[int, int, int]]) -> "Graph":
        """Build a Graph from (u, v, w) triples, canonicalizing like the parser.

        Self-loops are dropped and counted; endpoints must lie in [0, n).
        """
        edges: List[Edge] = []
        loops = 0
        for u, v, w in triples:
            if not (0 <= u < n):
                raise VertexOutOfRangeError(u, n, 0)
            if not (0 <= v < n):
                raise VertexOutOfRangeError(v, n, 0)
            if u == v:
                loops += 1
                continue
            if u > v:
                u, v = v, u
            edges.append(Edge(u, v, int(w), len(edges)))
        return cls(n=n, edges=tuple(edges), self_loops=loops)


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InvalidTokenError(f"{what} {token!r} is not an integer", line) from None


def parse_graph(text: Union[str, bytes]) -> Graph:
    """Parse the native edge-list format into a validated Graph."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            line = text[: exc.start].count(b"\n") + 1
            raise InvalidTokenError(
                f"byte 0x{text[exc.start]:02x} at offset {exc.start} is not valid UTF-8", line
            ) from None

    g = _parse_columns(text)
    return g if g is not None else _parse_lines(text)


def _parse_columns(text: str) -> Optional[Graph]:
    """Vectorized parse of well-formed input.

    Returns None for anything unusual (bad tokens, out-of-range ids,
    self-loops, wrong counts) so `_parse_lines` can report it with a line
    number.
    """
    lines = text.splitlines()
    if "#" in text:
        lines = [ln for ln in lines if not ln.lstrip().startswith("#")]
    rows = [r for r in map(str.split, lines) if r]
    if not rows or len(rows[0]) != 2:
        return None
    body = rows[1:]
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
    except ValueError:
        return None
    if n < 1 or m != len(body):
        return None
    if not body:
        return Graph(n=n, edges=())
    if set(map(len, body)) != {3}:
        return None

    try:
        cols = np.array(list(chain.from_iterable(body))).astype(np.int64).reshape(-1, 3)
    except (ValueError, OverflowError):
        return None
    u, v, w = cols[:, 0], cols[:, 1], cols[:, 2]
    if ((u < 0) | (u >= n) | (v < 0) | (v >= n) | (u == v)).any():
        return None

    lo = np.minimum(u, v).tolist()
    hi = np.maximum(u, v).tolist()
    return Graph(n=n, edges=tuple(map(Edge, lo, hi, w.tolist(), range(m))))


def _parse_lines(text: str) -> Graph:
    header = None
    triples: List[Tuple[int, int, int]] = []
    loops = 0
    first_loop_line = 0
    expected_m = 0
    n = 0
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        last_line = lineno
        tokens = stripped.split()

        if header is None:
            if len(tokens) != 2:
                raise MalformedHeaderError(
                    f"header must be 'n m', got {stripped!r}", lineno
                )
            try:
                n, expected_m = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise MalformedHeaderError(
                    f"header must be two integers, got {stripped!r}", lineno
                ) from None
            if n < 1 or expected_m < 0:
                raise MalformedHeaderError(
                    f"header needs n >= 1 and m >= 0, got n={n} m={expected_m}",
                    lineno,
                )
            header = (n, expected_m)
            continue

        if len(tokens) != 3:
            raise InvalidTokenError(
                f"edge line must be 'u v w', got {stripped!r}", lineno
            )
        if len(triples) + loops >= expected_m:
            raise EdgeCountMismatchError(expected_m, len(triples) + loops + 1, lineno)

        u = _parse_int(tokens[0], lineno, "vertex")
        v = _parse_int(tokens[1], lineno, "vertex")
        w = _parse_int(tokens[2], lineno, "weight")
        if not (0 <= u < n):
            raise VertexOutOfRangeError(u, n, lineno)
        if not (0 <= v < n):
            raise VertexOutOfRangeError(v, n, lineno)
        if not (INT64_MIN <= w <= INT64_MAX):
            raise WeightOverflowError(
                f"weight {w} does not fit in a signed 64-bit integer", lineno
            )
        if u == v:
            if not loops:
                first_loop_line = lineno
            loops += 1
            continue
        triples.append((u, v, w) if u < v else (v, u, w))

    if header is None:
        raise MalformedHeaderError("missing 'n m' header", 0)
    seen = len(triples) + loops
    if seen != expected_m:
        raise EdgeCountMismatchError(expected_m, seen, last_line)

    if loops:
        logger.warning(
            "Dropped %d self-loop(s), first on line %d", loops, first_loop_line
        )

    edges = tuple(Edge(u, v, w, eid) for eid, (u, v, w) in enumerate(triples))
    return Graph(n=n, edges=edges, self_loops=loops)


def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    """Serialize `g` in the input format. Parsing the result reproduces `g`
    (minus its self-loop count, which is not representable once dropped)."""
    parts = [f"# {c}\n" for c in comments]
    parts.append(f"{g.n} {g.m}\n")
    parts.extend(f"{e.u} {e.v} {e.w}\n" for e in g.edges)
    return "".join(parts)


def sort_edges(g: Graph) -> List[int]:
    """Edge ids ordered by EdgeKey (w, u, v, eid) ascending."""
    if g.m == 0:
        return []
    cols = np.array(g.edges, dtype=np.int64)
    # lexsort: last key is primary; column order is (u, v, w, eid).
    return np.lexsort((cols[:, 3], cols[:, 1], cols[:, 0], cols[:, 2])).tolist()


def count_components(g: Graph) -> int:
    seen = [False] * g.n
    adj = g.adjacency
    components = 0
    for start in range(g.n):
        if seen[start]:
            continue
        components += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, _ in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return components


def connectivity_check(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    seen = [False] * g.n
    seen[0] = True
    reached = 1
    adj = g.adjacency
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y, _ in adj[x]:
            if not seen[y]:
                seen[y] = True
                reached += 1
                queue.append(y)
    return reached == g.n
