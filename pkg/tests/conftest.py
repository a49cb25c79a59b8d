from typing import Union

import pytest
import numpy as np

from generators import generate
from graph_core import Graph, parse_graph


FOUR_CYCLE = "4 4\n0 1 1\n1 2 2\n2 3 3\n3 0 4\n"

# Letters of the hand-worked example mapped to vertex ids. Ids are chosen
# so that ascending-id DFS from c visits e before a, h before b before f.
NAMES = {"h": 0, "b": 1, "g": 2, "e": 3, "c": 4, "a": 5, "d": 6, "f": 7}
WALKTHROUGH_ROOT = NAMES["c"]

# Listed in weight order, so eid == w - 1.
WALKTHROUGH_EDGES = [
    ("h", "g", 1),
    ("e", "h", 2),
    ("e", "b", 3),
    ("c", "e", 4),
    ("a", "d", 5),
    ("g", "e", 6),
    ("e", "f", 7),
    ("b", "g", 8),
    ("c", "a", 9),
    ("d", "f", 10),
    ("c", "b", 11),
    ("a", "h", 12),
    ("f", "g", 13),
]


def walkthrough_eid(x: str, y: str) -> int:
    pair = {x, y}
    for eid, (u, v, _) in enumerate(WALKTHROUGH_EDGES):
        if {u, v} == pair:
            return eid
    raise KeyError((x, y))


@pytest.fixture
def four_cycle() -> Graph:
    return parse_graph(FOUR_CYCLE)


@pytest.fixture
def walkthrough() -> Graph:
    return Graph.from_edges(
        len(NAMES), ((NAMES[u], NAMES[v], w) for u, v, w in WALKTHROUGH_EDGES)
    )


@pytest.fixture
def random_graph():
    """Factory: random_graph(seed) -> connected graph with n in [2, 60],
    weights in [-50, 50] so duplicates are common."""

    def make(seed: int, n_max: int = 60) -> Graph:
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, n_max + 1))
        cap = min(4 * n, n * (n - 1) // 2)
        m = int(rng.integers(n - 1, cap + 1))
        return generate("random-connected", n, m, seed=seed, wmin=-50, wmax=50)

    return make


@pytest.fixture
def graph_file(tmp_path):
    """Write graph text to a temp file and return its path as a string."""

    def write(text: Union[str, bytes], name: str = "graph.txt") -> str:
        path = tmp_path / name
        if isinstance(text, bytes):
            path.write_bytes(text)
        else:
            path.write_text(text)
        return str(path)

    return write
