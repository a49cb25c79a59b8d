"""Linearity checks for the scan. Slow; run with `pytest -m slow`.

The step counter is deterministic, so its ratio is checked tightly. Wall
time is checked on the same ladder with the bench threshold.
"""

from time import perf_counter

import pytest

from cli import main
from graph_core import Graph
from mst_kruskal import kruskal
from replacement_engine import bridges, find_replacement_edges
from services.benchmark import finds_bound, run_ladder
from tree_index import build_tree_index


pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def gt_ladder():
    return run_ladder(family="path-chords", k_min=13, k_max=17, density=4, engine="gt", repeats=3)


def test_step_counter_grows_linearly(gt_ladder):
    for prev, cur in zip(gt_ladder, gt_ladder[1:]):
        assert cur.steps / prev.steps <= 2.2, (prev.n, cur.n)


def test_scan_time_grows_linearly(gt_ladder):
    for prev, cur in zip(gt_ladder, gt_ladder[1:]):
        assert cur.scan_s / prev.scan_s <= 2.6, (prev.n, cur.n)


def test_operation_bounds_on_every_row(gt_ladder):
    for row in gt_ladder:
        assert row.finds <= finds_bound(row.n, row.m)
        assert row.links <= row.n - 1
        assert row.makesets == row.n


@pytest.mark.timeout(600)
def test_deep_path_computes_within_budget(tmp_path, capsys):
    """A path of a million vertices plus ten chords: every traversal is
    iterative and `compute` finishes in under five seconds"""
    n = 1_000_000
    span = 99_991
    chords = [(k * span, (k + 1) * span, 2) for k in range(10)]
    lines = [f"{n} {n - 1 + len(chords)}"]
    lines += [f"{i} {i + 1} 1" for i in range(n - 1)]
    lines += [f"{u} {v} {w}" for u, v, w in chords]
    path = tmp_path / "deep.txt"
    path.write_text("\n".join(lines) + "\n")

    start = perf_counter()
    code = main(["compute", str(path)])
    elapsed = perf_counter() - start
    out, err = capsys.readouterr()

    assert code == 0, err
    assert elapsed < 5.0, f"compute took {elapsed:.2f}s"
    report = out.splitlines()
    assert report[0] == f"GRAPH {n} {n + 9}"
    assert len(report) == n + 2
    # the chords cover the path up to 10 * span; the tail edges stay bridges
    assert report[-1] == f"VITAL UNDEFINED bridges={n - 1 - 10 * span}"

    g = Graph.from_edges(n, [(i, i + 1, 1) for i in range(n - 1)] + chords)
    mst = kruskal(g)
    ti = build_tree_index(g, mst, 0)
    assert max(ti.depth) == n - 1
    rt = find_replacement_edges(g, mst, ti, engine="gt")
    assert rt.bridge_edges() == bridges(g)
