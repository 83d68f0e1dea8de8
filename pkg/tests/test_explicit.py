import random

import pytest

from dyncolor.explicit import ColorId, ExplicitColoring, palette_size
from dyncolor.levels import Hierarchy
from dyncolor.oracles import SnapshotGraph, is_proper


@pytest.mark.parametrize("g, size", [(0, 6), (1, 11), (3, 41), (4, 82), (6, 327)])
def test_palette_size(g, size):
    assert palette_size(g) == size


def _proper(h, c):
    return is_proper(SnapshotGraph.of(h.n, list(h.edges())), c.colors())


def test_fresh_graph_is_level_one():
    h = Hierarchy(10)
    c = ExplicitColoring(h, seed=3)
    assert all(col.level == 1 and 0 <= col.index < 6 for col in c.colors())
    assert _proper(h, c)


def test_single_free_color_is_forced():
    # centre at level 1 with five same-level neighbours on five distinct colors
    h = Hierarchy(16)
    c = ExplicitColoring(h, seed=0)
    for leaf, idx in zip(range(1, 6), range(5)):
        h.insert_edge(0, leaf)
        c._color[leaf] = ColorId(1, idx)
    for seed in range(20):
        c.rng.seed(seed)
        c._recolor(0)
        assert c.color_of(0) == ColorId(1, 5)


def test_star_colors(star16):
    h, _ = star16
    c = ExplicitColoring(Hierarchy(16), seed=1)
    # replay the star on a coloring that watches the moves
    h2 = c.h
    for leaf in range(1, 7):
        h2.insert_edge(0, leaf)
        c.on_edge_inserted(0, leaf)
    assert c.color_of(0).level == 2
    assert all(c.color_of(x).level == 1 for x in range(1, 7))
    assert _proper(h2, c)


def test_conflict_recolors_older_endpoint():
    h = Hierarchy(8)
    c = ExplicitColoring(h, seed=0)
    c._color[2] = c._color[5] = ColorId(1, 4)
    c._in_use = __import__("collections").Counter(c._color)
    h.insert_edge(2, 5)
    c.on_edge_inserted(2, 5)
    assert c.conflicts == 1
    assert c.color_of(5) == ColorId(1, 4)
    assert c.color_of(2) != ColorId(1, 4)


def test_cross_level_edge_never_conflicts(star16):
    h, _ = star16
    c = ExplicitColoring(h, seed=0)
    before = c.colors()
    h.insert_edge(0, 9)
    c.on_edge_inserted(0, 9)
    assert c.colors() == before and c.conflicts == 0


def _run(seed, n=40, steps=1500, stream_seed=11):
    rng = random.Random(stream_seed)
    h = Hierarchy(n)
    c = ExplicitColoring(h, seed=seed)
    for _ in range(steps):
        u, v = rng.sample(range(n), 2)
        if h.has_edge(u, v):
            h.delete_edge(u, v)
        else:
            h.insert_edge(u, v)
            c.on_edge_inserted(u, v)
        assert _proper(h, c)
    return h, c


def test_random_stream_stays_proper_and_reproducible():
    h, c = _run(seed=5)
    _, c2 = _run(seed=5)
    assert c.colors() == c2.colors()
    assert c.starved == 0
    # palettes on levels actually reached bound every color ever used
    top = max(col.level for col in c.ever_used)
    bound = sum(palette_size(h.group_of(i)) for i in range(1, top + 1))
    assert len(c.ever_used) <= bound
    assert c.colors_in_use() == len(set(c.colors()))
