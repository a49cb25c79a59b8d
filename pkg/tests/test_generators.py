import unittest

import numpy as np
import pytest

from generators import (
    FAMILIES,
    InfeasibleGeneratorError,
    generate,
    grid_pairs,
    random_tree_pairs,
)
from graph_core import connectivity_check


class TestFamilies(unittest.TestCase):
    def test_every_family_connected(self):
        for family in FAMILIES:
            with self.subTest(family=family):
                g = generate(family, 30, 60 if family in ("random-connected", "path-chords") else None, seed=1)
                self.assertTrue(connectivity_check(g))

    def test_random_connected_is_simple(self):
        g = generate("random-connected", 40, 300, seed=2)
        pairs = {(e.u, e.v) for e in g.edges}
        self.assertEqual(len(pairs), g.m)

    def test_complete_graph_reachable(self):
        g = generate("random-connected", 6, 15, seed=0)
        self.assertEqual(g.m, 15)

    def test_path_chords_keeps_path(self):
        g = generate("path-chords", 10, 20, seed=3)
        self.assertEqual([(e.u, e.v) for e in g.edges[:9]], [(i, i + 1) for i in range(9)])
        self.assertTrue(all(e.u != e.v for e in g.edges))

    def test_single_vertex(self):
        for family in ("random-connected", "tree", "grid"):
            g = generate(family, 1, seed=0)
            self.assertEqual((g.n, g.m), (1, 0))

    def test_infeasible(self):
        cases = [
            ("random-connected", 4, 7),
            ("random-connected", 5, 3),
            ("path-chords", 5, 2),
            ("path-chords", 1, 1),
            ("tree", 5, 5),
            ("grid", 4, 3),
        ]
        for family, n, m in cases:
            with self.subTest(family=family, n=n, m=m):
                with self.assertRaises(InfeasibleGeneratorError):
                    generate(family, n, m)

    def test_unknown_family(self):
        with self.assertRaises(KeyError):
            generate("moebius", 5)


def test_deterministic_per_seed():
    a = generate("random-connected", 80, 200, seed=11)
    b = generate("random-connected", 80, 200, seed=11)
    c = generate("random-connected", 80, 200, seed=12)
    assert a == b
    assert a != c


def test_weights_in_range_with_duplicates():
    g = generate("path-chords", 200, 400, seed=5, wmin=-2, wmax=2)
    weights = [e.w for e in g.edges]
    assert min(weights) >= -2 and max(weights) <= 2
    assert len(set(weights)) < len(weights)


@pytest.mark.parametrize("n", [2, 3, 10, 57])
def test_random_tree_pairs_span(n):
    pairs = random_tree_pairs(n, np.random.default_rng(n))
    assert len(pairs) == n - 1
    parent = list(range(n))

    def root(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = root(u), root(v)
        assert ru != rv
        parent[ru] = rv


def test_grid_shape():
    # 3 columns, 7 vertices: rows [0 1 2] [3 4 5] [6]
    assert sorted(grid_pairs(7)) == [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 6), (4, 5)]
