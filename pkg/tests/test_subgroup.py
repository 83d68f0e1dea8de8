import random

import pytest

from dyncolor.explicit import ExplicitColoring
from dyncolor.levels import Hierarchy
from dyncolor.oracles import SnapshotGraph, is_proper
from dyncolor.subgroup import (
    CombinedColoring,
    ColorRecord,
    SubgroupColor,
    SubgroupColoring,
    subgroup_width,
)


@pytest.mark.parametrize(
    "n, alpha, L, J",
    [(16, 2, 6, 2), (16, 4, 6, 1), (2**20, 2, 22, 4), (2**16, 2, 18, 4), (2**16, 16, 18, 1), (2, 2, 3, 1)],
)
def test_width(n, alpha, L, J):
    assert subgroup_width(n, alpha, L) == J


def test_clock():
    s = SubgroupColoring(Hierarchy(4))
    assert s.t == 0
    for _ in range(100):
        s.on_update()
    assert s.t == 100


def test_isolated_vertex_freshness():
    s = SubgroupColoring(Hierarchy(8))
    for _ in range(5):
        s.on_update()
    rec = s.query(3)
    assert rec == ColorRecord(SubgroupColor(0, 0, 0), 5)
    assert s.last_refreshed == [3]
    assert s.query(3) is rec and s.last_refreshed == []


def test_same_level_edge():
    h = Hierarchy(8)
    s = SubgroupColoring(h)
    h.insert_edge(2, 6)
    s.on_update()
    cu, cv = s.query(2).color, s.query(6).color
    assert cu != cv and (cu.index, cv.index) == (0, 1)


def test_star_refresh_recurses_upward(star16):
    h, _ = star16
    s = SubgroupColoring(h)
    s.on_update()
    assert s.width == 2
    # leaf at level 1 shares subgroup (levels 1..2) with the centre at level 2
    rec = s.query(1)
    assert s.last_refreshed == [0, 1]
    assert s.record(0).color == SubgroupColor(0, 0, 0)
    assert rec.color == SubgroupColor(0, 0, 1)
    colors = [s.query(v).color for v in range(16)]
    assert is_proper(SnapshotGraph.of(16, list(h.edges())), colors)


def test_rejects_bad_vertex():
    with pytest.raises(IndexError):
        SubgroupColoring(Hierarchy(4)).query(4)


def test_combined_modes():
    big = Hierarchy(2**16)
    comb = CombinedColoring(SubgroupColoring(big, alpha=lambda: 1), ExplicitColoring(big))
    assert comb.mode() == "subgroup"  # alpha* = 1 <= 1.6
    big.insert_edge(0, 1)
    assert big.arboricity_estimate() == 2
    assert comb.mode() == "explicit"  # 2 > 1.6

    h = Hierarchy(64)
    comb = CombinedColoring(SubgroupColoring(h), ExplicitColoring(h))
    for u in range(64):
        for v in range(u + 1, 64):
            h.insert_edge(u, v)
            comb.explicit.on_edge_inserted(u, v)
    assert comb.mode() == "explicit"
    g = SnapshotGraph.of(64, list(h.edges()))
    assert is_proper(g, [comb.query(v)[1] for v in range(64)])


def test_random_stream_proper_every_window():
    rng = random.Random(4)
    n = 48
    h = Hierarchy(n)
    s = SubgroupColoring(h)
    for _ in range(800):
        u, v = rng.sample(range(n), 2)
        (h.delete_edge if h.has_edge(u, v) else h.insert_edge)(u, v)
        s.on_update()
        # query in random order, so refreshes interleave with cached colors
        order = rng.sample(range(n), n)
        colors = {x: s.query(x).color for x in order}
        assert is_proper(SnapshotGraph.of(n, list(h.edges())), colors)
