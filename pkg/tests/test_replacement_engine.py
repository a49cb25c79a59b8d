import unittest

import pytest

import dsu
from conftest import NAMES, WALKTHROUGH_EDGES, WALKTHROUGH_ROOT, walkthrough_eid
from dsu import ContractViolation
from graph_core import Graph, parse_graph
from mst_kruskal import kruskal
from oracle import oracle_bridges, oracle_replacements
from replacement_engine import (
    BRIDGE,
    Plan,
    ReplacementTable,
    bridges,
    find_replacement_edges,
    most_vital_edge,
    path_label,
    sensitivity_rows,
)
from services.benchmark import finds_bound
from tree_index import build_tree_index


def run(g, root=0, engine="gt", early_exit=False, trace=None):
    mst = kruskal(g)
    ti = build_tree_index(g, mst, root)
    rt = find_replacement_edges(g, mst, ti, early_exit, engine=engine, trace=trace)
    return mst, ti, rt


class TestReplacementTable(unittest.TestCase):
    def test_first_assignment_wins(self):
        rt = ReplacementTable(4, [0, 1])
        rt.assign(0, 3)
        with self.assertRaises(ContractViolation):
            rt.assign(0, 2)
        self.assertEqual(rt.finalize().get(0), 3)

    def test_non_tree_rejected(self):
        rt = ReplacementTable(4, [0, 1])
        with self.assertRaises(ContractViolation):
            rt.assign(2, 3)
        with self.assertRaises(ContractViolation):
            rt.assign(-1, 3)

    def test_unassigned_becomes_bridge_on_finalize(self):
        rt = ReplacementTable(3, [0, 1])
        rt.assign(1, 2)
        with self.assertRaises(KeyError):
            rt.get(0)
        rt.finalize()
        self.assertIs(rt.get(0), BRIDGE)
        self.assertEqual(rt.bridge_edges(), {0})
        self.assertEqual(rt.as_dict(), {0: None, 1: 2})


class TestWalkthrough(unittest.TestCase):
    def setUp(self):
        self.g = Graph.from_edges(
            len(NAMES), ((NAMES[u], NAMES[v], w) for u, v, w in WALKTHROUGH_EDGES)
        )

    def eid(self, x, y):
        return walkthrough_eid(x, y)

    def test_replacements(self):
        """Each tree edge gets the lightest non-tree edge covering it"""
        for engine in dsu.names():
            with self.subTest(engine=engine):
                _, _, rt = run(self.g, WALKTHROUGH_ROOT, engine)
                expected = {
                    ("g", "h"): ("g", "e"),
                    ("h", "e"): ("g", "e"),
                    ("b", "e"): ("b", "g"),
                    ("d", "a"): ("d", "f"),
                    ("a", "c"): ("d", "f"),
                    ("f", "e"): ("d", "f"),
                    ("e", "c"): ("d", "f"),
                }
                for tree, repl in expected.items():
                    self.assertEqual(rt.get(self.eid(*tree)), self.eid(*repl), tree)
                self.assertEqual(rt.bridge_edges(), set())

    def test_trace(self):
        """ANC then SKIP, RIGHT then a LEFT that assigns nothing"""
        trace = []
        run(self.g, WALKTHROUGH_ROOT, "gt", trace=trace)
        e = self.eid
        rendered = [t.render() for t in trace[:6]]
        self.assertEqual(rendered, [
            f"e={e('g', 'e')} plan=ANC assigned=[{e('g', 'h')},{e('h', 'e')}]",
            f"e={e('g', 'e')} plan=SKIP assigned=[]",
            f"e={e('b', 'g')} plan=RIGHT assigned=[{e('b', 'e')}]",
            f"e={e('b', 'g')} plan=LEFT assigned=[]",
            f"e={e('d', 'f')} plan=RIGHT assigned=[{e('d', 'a')},{e('a', 'c')}]",
            f"e={e('d', 'f')} plan=LEFT assigned=[{e('f', 'e')},{e('e', 'c')}]",
        ])
        self.assertEqual(len(trace), 2 * (self.g.m - self.g.n + 1))
        self.assertTrue(all(t.assigned == () for t in trace[6:]))

    def test_left_call_jumps_to_lca(self):
        mst = kruskal(self.g)
        ti = build_tree_index(self.g, mst, WALKTHROUGH_ROOT)
        su = dsu.create("gt", ti.parent, ti.root)
        rt = ReplacementTable(self.g.m, mst.tree_edges)
        b, g, e = NAMES["b"], NAMES["g"], NAMES["e"]
        self.assertEqual(path_label(ti, su, rt, g, e, self.eid("g", "e")), Plan.ANC)
        self.assertIsNone(path_label(ti, su, rt, e, g, self.eid("g", "e")))
        self.assertEqual(path_label(ti, su, rt, b, g, self.eid("b", "g")), Plan.RIGHT)
        before = rt.assigned_count
        iterations = su.stats.loop_iterations
        self.assertEqual(path_label(ti, su, rt, g, b, self.eid("b", "g")), Plan.LEFT)
        self.assertEqual(rt.assigned_count, before)
        self.assertEqual(su.stats.loop_iterations - iterations, 1)

    def test_early_exit_stops_after_last_assignment(self):
        trace = []
        _, _, rt = run(self.g, WALKTHROUGH_ROOT, "gt", early_exit=True, trace=trace)
        self.assertEqual(len(trace), 6)
        _, _, full = run(self.g, WALKTHROUGH_ROOT, "gt")
        self.assertEqual(rt.as_dict(), full.as_dict())

    def test_vital_edge(self):
        mst, _, rt = run(self.g, WALKTHROUGH_ROOT)
        vital = most_vital_edge(self.g, rt)
        self.assertTrue(vital.defined)
        self.assertEqual(vital.edge, self.eid("c", "e"))
        self.assertEqual(vital.delta, 6)

        rows = {r.tree_eid: r for r in sensitivity_rows(self.g, mst, rt)}
        deltas = {("h", "g"): 5, ("e", "h"): 4, ("e", "b"): 5, ("c", "e"): 6,
                  ("a", "d"): 5, ("e", "f"): 3, ("c", "a"): 1}
        for tree, delta in deltas.items():
            row = rows[self.eid(*tree)]
            self.assertEqual(row.delta, delta, tree)
            self.assertEqual(row.weight_after_failure, 31 + delta)


def test_four_cycle(four_cycle):
    for engine in dsu.names():
        _, _, rt = run(four_cycle, 0, engine)
        assert rt.as_dict() == {0: 3, 1: 3, 2: 3}
        vital = most_vital_edge(four_cycle, rt)
        assert (vital.defined, vital.edge, vital.delta) == (True, 0, 3)


def test_root_choice_does_not_change_table(four_cycle):
    tables = [run(four_cycle, root)[2].as_dict() for root in range(4)]
    assert all(t == tables[0] for t in tables)


def test_pure_tree_all_bridges():
    g = parse_graph("5 4\n0 1 1\n1 2 2\n1 3 3\n3 4 4\n")
    _, _, rt = run(g)
    assert rt.bridge_edges() == {0, 1, 2, 3}
    assert bridges(g) == {0, 1, 2, 3}
    vital = most_vital_edge(g, rt)
    assert not vital.defined
    assert vital.bridge_count == 4


def test_parallel_edge_replaces_its_twin():
    g = parse_graph("2 2\n0 1 3\n0 1 5\n")
    _, _, rt = run(g)
    assert rt.as_dict() == {0: 1}
    assert bridges(g) == set()


def test_pendant_bridge_in_cyclic_graph():
    g = parse_graph("4 4\n0 1 1\n1 2 1\n0 2 5\n2 3 2\n")
    _, _, rt = run(g)
    assert rt.get(3) is BRIDGE
    assert rt.get(0) == 2 and rt.get(1) == 2
    assert bridges(g) == {3}
    vital = most_vital_edge(g, rt)
    assert not vital.defined and vital.bridge_count == 1


def test_single_vertex():
    g = parse_graph("1 0\n")
    _, _, rt = run(g)
    assert rt.as_dict() == {}
    vital = most_vital_edge(g, rt)
    assert not vital.defined and vital.bridge_count == 0


def test_vital_tie_goes_to_smaller_edge_key():
    # both tree edges have delta 4
    g = parse_graph("3 3\n0 1 1\n1 2 1\n0 2 5\n")
    _, _, rt = run(g)
    vital = most_vital_edge(g, rt)
    assert (vital.edge, vital.delta) == (0, 4)


def test_caller_supplied_union_is_used(four_cycle):
    mst = kruskal(four_cycle)
    ti = build_tree_index(four_cycle, mst, 0)
    su = dsu.create("ref", ti.parent, ti.root)
    rt = find_replacement_edges(four_cycle, mst, ti, union=su)
    assert rt.stats is su.stats
    assert su.stats.links == 3


@pytest.mark.parametrize("engine", ["gt", "ref"])
@pytest.mark.parametrize("seed", range(25))
def test_random_graphs(random_graph, engine, seed):
    """Oracle agreement, bridge consistency, early exit and the op-count bounds"""
    g = random_graph(seed)
    mst, ti, rt = run(g, seed % g.n, engine)

    assert rt.as_dict() == oracle_replacements(g, mst).as_table()
    assert rt.bridge_edges() == bridges(g) == (oracle_bridges(g) & mst.tree_edges)
    assert bridges(g) <= mst.tree_edges

    _, _, early = run(g, seed % g.n, engine, early_exit=True)
    assert early.as_dict() == rt.as_dict()

    stats = rt.stats
    assert stats.makesets == g.n
    assert stats.links == g.n - 1 - len(rt.bridge_edges())
    assert stats.finds <= finds_bound(g.n, g.m)


def _walk_to_lca(ti, s, t):
    """Tree edges on the s..t path and their LCA, by parent walking."""
    path = set()
    a, b = s, t
    while ti.depth[a] > ti.depth[b]:
        path.add(ti.parent_eid[a])
        a = ti.parent[a]
    while ti.depth[b] > ti.depth[a]:
        path.add(ti.parent_eid[b])
        b = ti.parent[b]
    while a != b:
        path.add(ti.parent_eid[a])
        path.add(ti.parent_eid[b])
        a, b = ti.parent[a], ti.parent[b]
    return path, a


@pytest.mark.parametrize("engine", ["gt", "ref"])
@pytest.mark.parametrize("seed", range(40))
def test_links_stay_on_cycle_below_lca(random_graph, engine, seed):
    """Every vertex linked by one PathLabel call hangs off the edge's
    fundamental cycle, strictly below the LCA of its endpoints"""
    g = random_graph(seed)
    mst = kruskal(g)
    root = seed % g.n
    ti = build_tree_index(g, mst, root)
    su = dsu.create(engine, ti.parent, ti.root)
    rt = ReplacementTable(g.m, mst.tree_edges)

    for eid in mst.nontree_sorted:
        e = g.edges[eid]
        cycle, lca = _walk_to_lca(ti, e.u, e.v)
        for s, t in ((e.u, e.v), (e.v, e.u)):
            before = list(su.linked)
            path_label(ti, su, rt, s, t, eid)
            for v in range(g.n):
                if su.linked[v] and not before[v]:
                    assert ti.depth[v] > ti.depth[lca], (eid, v)
                    assert ti.parent_eid[v] in cycle, (eid, v)
                    assert rt.as_dict()[ti.parent_eid[v]] == eid
