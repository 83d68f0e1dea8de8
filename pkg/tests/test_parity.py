import random

import pytest

from dyncolor.arbdecomp import ArbDecomp, ForestEdgeEvent, ForestOp
from dyncolor.levels import Hierarchy
from dyncolor.oracles import SnapshotGraph, is_proper
from dyncolor.parity import ParityColoring, ParityVector


def _wired(n):
    h, d = Hierarchy(n), ArbDecomp(n)
    p = ParityColoring(n, d.active_forest_count)

    def insert(u, v):
        for e in d.apply_all(h.insert_edge(u, v)):
            p.on_forest_event(e)

    def delete(u, v):
        for e in d.apply_all(h.delete_edge(u, v)):
            p.on_forest_event(e)

    return h, d, p, insert, delete


def test_isolated_vertex_is_empty_vector():
    _, _, p, _, _ = _wired(3)
    assert p.query(1) == ParityVector(0, ())
    assert p.query(1).render() == "(0, 0)"


def test_single_edge():
    _, d, p, insert, _ = _wired(2)
    insert(0, 1)
    assert d.slot_of(0, 1) == 0
    assert p.query(0) == ParityVector(2, (1, 0))
    assert p.query(1) == ParityVector(2, (0, 0))


def test_triangle_bichromatic():
    h, d, p, insert, _ = _wired(3)
    for u, v in [(0, 1), (1, 2), (0, 2)]:
        insert(u, v)
    colors = [p.query(v) for v in range(3)]
    assert is_proper(SnapshotGraph.of(3, list(h.edges())), colors)
    assert len(set(colors)) <= 2 ** d.active_forest_count()


def test_slot_move_cut_then_link():
    # removal at pair 0 with a pair-2 out-edge still present forces a move
    h, d, p, insert, delete = _wired(16)
    for leaf in (1, 2, 3):
        insert(0, leaf)
    assert all(h.tail_of(0, x) == 0 for x in (1, 2, 3))
    delete(0, 1)
    for j in range(d.slots_touched):
        f = p.forest(j)
        if f is not None:
            assert {tuple(sorted(e)) for e in f.edges()} == d.forest_contents(j)
    assert is_proper(SnapshotGraph.of(16, list(h.edges())), [p.query(v) for v in range(16)])


def test_forest_index_out_of_range():
    p = ParityColoring(3, lambda: 0)
    with pytest.raises(IndexError):
        p.on_forest_event(ForestEdgeEvent(ForestOp.INSERT, 6, 0, 1))
    with pytest.raises(IndexError):
        p.query(3)


def test_query_is_stable_within_window():
    h, _, p, insert, _ = _wired(12)
    for u, v in [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (0, 5)]:
        insert(u, v)
    first = [p.query(v) for v in range(12)]
    assert [p.query(v) for v in range(12)] == first


def test_query_all_matches_single_queries():
    h, _, p, insert, delete = _wired(20)
    rng = random.Random(2)
    for _ in range(300):
        u, v = rng.sample(range(20), 2)
        (delete if h.has_edge(u, v) else insert)(u, v)
        assert p.query_all() == [p.query(x) for x in range(20)]
