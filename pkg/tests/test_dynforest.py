import random

import pytest

from dyncolor import dynforest
from dyncolor._lct_py import LinkCut as PyLinkCut
from dyncolor.dynforest import DynForest
from dyncolor.oracles import bfs_distances, components

KERNELS = [pytest.param(PyLinkCut, id="python")]
if dynforest.KERNEL == "cython":
    from dyncolor._lct import LinkCut as CyLinkCut

    KERNELS.append(pytest.param(CyLinkCut, id="cython"))


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


def test_link_singletons(kernel):
    f = DynForest(4, kernel)
    a, b = 0, 1
    f.link(a, b)
    assert not f.is_marked(a) and f.is_marked(b)
    assert f.root_of(a) == b == f.root_of(b)
    assert (f.dist_to_root(a), f.dist_to_root(b)) == (1, 0)
    with pytest.raises(ValueError):
        f.link(a, b)
    with pytest.raises(ValueError):
        f.link(b, a)


def test_cut_path(kernel):
    f = DynForest(3, kernel)
    a, b, c = 0, 1, 2
    f.link(b, c)
    f.link(a, b)
    assert (f.dist_to_root(a), f.dist_to_root(b)) == (2, 1)
    f.cut(a, b)
    assert f.is_marked(a) and f.root_of(a) == a
    assert f.root_of(b) == c and f.is_marked(c) and not f.is_marked(b)
    assert f.marked() == [a, c]


def test_cut_only_edge(kernel):
    f = DynForest(2, kernel)
    f.link(0, 1)
    f.cut(1, 0)
    assert f.marked() == [0, 1]
    with pytest.raises(KeyError):
        f.cut(0, 1)


def test_isolated(kernel):
    f = DynForest(5, kernel)
    assert f.root_of(3) == 3 and f.dist_to_root(3) == 0
    with pytest.raises(IndexError):
        f.root_of(5)


def test_cut_keeps_the_root_side(kernel):
    # cutting near the root: the far side gets a new marked root
    f = DynForest(4, kernel)
    f.link(1, 0)
    f.link(2, 1)
    f.link(3, 2)
    f.cut(0, 1)
    assert f.root_of(3) == 1 and f.dist_to_root(3) == 2
    assert f.marked() == [0, 1]


@pytest.mark.parametrize("seed", range(3))
def test_random_against_bfs(kernel, seed):
    n = 40
    rng = random.Random(seed)
    f = DynForest(n, kernel)
    edges: set[tuple[int, int]] = set()
    for _ in range(800):
        if edges and rng.random() < 0.4:
            u, v = rng.choice(sorted(edges))
            f.cut(u, v)
            edges.discard((u, v))
        else:
            u, v = rng.sample(range(n), 2)
            if f.same_tree(u, v):
                continue
            f.link(u, v)
            edges.add((min(u, v), max(u, v)))
        comp = components(n, edges)
        roots = f.marked()
        assert sorted(comp[r] for r in roots) == sorted(set(comp))
        dist = bfs_distances(n, edges, roots)
        assert [f.dist_to_root(x) for x in range(n)] == dist
        assert all(f.root_of(x) in roots for x in range(n))
