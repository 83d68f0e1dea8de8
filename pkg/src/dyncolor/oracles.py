"""Brute-force ground truth for the dynamic structures.

Nothing here reads the dynamic modules' internals beyond their public
read-only views, and nothing here shares state with them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

MAX_EXACT_N = 15


@dataclass(frozen=True)
class SnapshotGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SnapshotGraph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise ValueError(f"duplicate edge {e}")
            norm.add(e)
        return cls(n, tuple(sorted(norm)))


def _subset_edge_counts(g: SnapshotGraph) -> tuple[np.ndarray, np.ndarray]:
    """Edge count and size of every vertex subset, indexed by bitmask."""
    n = g.n
    if n > MAX_EXACT_N:
        raise ValueError(f"exhaustive subsets need n <= {MAX_EXACT_N}, got {n}")
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int64)
    for b in range(n):
        popcount += (masks >> b) & 1
    edges = np.zeros(size, dtype=np.int64)
    for b in range(n):
        lo = 1 << b
        rest = masks[:lo]
        # subsets whose highest vertex is b: edges inside the rest plus b's edges into it
        edges[lo: 2 * lo] = edges[:lo] + popcount[rest & adj[b]]
    return edges, popcount


def exact_arboricity(g: SnapshotGraph) -> int:
    """Nash-Williams: max over |S| >= 2 of ceil(|E(S)| / (|S| - 1)); 0 if edgeless."""
    if not g.edges:
        if g.n > MAX_EXACT_N:
            raise ValueError(f"exhaustive subsets need n <= {MAX_EXACT_N}, got {g.n}")
        return 0
    edges, size = _subset_edge_counts(g)
    ok = size >= 2
    e, s = edges[ok], size[ok]
    return int(np.max(-(-e // (s - 1))))


def densest_subgraph_density(g: SnapshotGraph) -> float:
    """max over non-empty S of |E(S)| / |S|."""
    edges, size = _subset_edge_counts(g)
    ok = size >= 1
    return float(np.max(edges[ok] / size[ok]))


def is_proper(g: SnapshotGraph, colors: Mapping[int, Hashable] | Sequence[Hashable]) -> bool:
    for v in range(g.n):
        try:
            colors[v]
        except (KeyError, IndexError):
            raise KeyError(f"no color for vertex {v}") from None
    return all(colors[u] != colors[v] for u, v in g.edges)


def is_forest(edges: Iterable[tuple[int, int]]) -> bool:
    """Union-find cycle check over an undirected edge list."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            parent[x], x = root, parent.get(x, x)
        return root

    for u, v in edges:
        if u == v:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def bfs_distances(n: int, edges: Iterable[tuple[int, int]], sources: Iterable[int]) -> list[int]:
    """Hop distance from the nearest source; -1 where unreachable."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = [-1] * n
    q = deque()
    for s in sources:
        dist[s] = 0
        q.append(s)
    while q:
        x = q.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def components(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Component label (smallest member) per vertex."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    label = [-1] * n
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = s
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if label[y] < 0:
                    label[y] = s
                    stack.append(y)
    return label


# -- audits -----------------------------------------------------------------


def audit_levels(h) -> list[str]:
    """Every violated level invariant of a :class:`~dyncolor.levels.Hierarchy`."""
    out: list[str] = []
    n, L, k = h.n, h.L, h.k
    level = [h.level_of(v) for v in range(n)]
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in h.edges():
        adj[u].add(v)
        adj[v].add(u)
    outdeg = [0] * n
    for v in range(n):
        i = level[v]
        if not 1 <= i <= k:
            out.append(f"vertex {v}: level {i} outside [1, {k}]")
            continue
        up = near = 0
        for u in adj[v]:
            lu = level[u]
            if lu >= i:
                up += 1
            if lu >= i - 1:
                near += 1
            if lu > i or (lu == i and v < u):
                outdeg[v] += 1
        cap = 5 * 2 ** ((i - 1) // L)
        if i < k and up > cap:
            out.append(f"inv1 vertex {v} level {i}: {up} neighbours at >= {i} exceeds {cap}")
        if i > 1:
            floor = 2 ** ((i - 2) // L)
            if near < floor:
                out.append(f"inv2 vertex {v} level {i}: {near} neighbours at >= {i - 1} below {floor}")
        below, up_list = h.lists_view(v)
        listed = len(up_list)
        for u in up_list:
            if u not in adj[v] or level[u] < i:
                out.append(f"lists vertex {v}: {u} misfiled in the upward list")
        for j, bucket in below.items():
            if j >= i:
                out.append(f"lists vertex {v}: below-list for level {j} >= own level {i}")
            listed += len(bucket)
            for u in bucket:
                if u not in adj[v] or level[u] != j:
                    out.append(f"lists vertex {v}: {u} misfiled under level {j}")
        if listed != len(adj[v]):
            out.append(f"lists vertex {v}: {listed} list entries for {len(adj[v])} neighbours")
        if h.outdegree(v) != outdeg[v]:
            out.append(f"orientation vertex {v}: outdegree {h.outdegree(v)} != recount {outdeg[v]}")
    if h.max_outdegree() != max(outdeg, default=0):
        out.append(f"max_outdegree {h.max_outdegree()} != recount {max(outdeg, default=0)}")
    return out


def audit_decomp(d, orientation: Mapping[tuple[int, int], object] | Iterable[tuple[int, int]]) -> list[str]:
    """Every violated forest-slot invariant of an :class:`~dyncolor.arbdecomp.ArbDecomp`.

    ``orientation`` is the set of directed edges the decomposition should hold.
    """
    out: list[str] = []
    slots = d.directed_edges()
    directed = set(orientation)
    if set(slots) != directed:
        extra = sorted(set(slots) - directed)
        missing = sorted(directed - set(slots))
        out.append(f"edges: stored-not-oriented {extra}, oriented-not-stored {missing}")
    per_vertex: dict[int, dict[int, int]] = {}
    for (u, v), j in slots.items():
        per_vertex.setdefault(u, {})
        if j in per_vertex[u]:
            out.append(f"vertex {u}: two out-edges in forest {j}")
        per_vertex[u][j] = v
    for v in range(d.n):
        own = per_vertex.get(v, {})
        deg = len(own)
        for pair in range(deg):
            held = (2 * pair in own) + (2 * pair + 1 in own)
            if held != 1:
                out.append(f"inv1 vertex {v}: pair {pair} holds {held} out-edges")
        for j in own:
            if j >= 2 * deg:
                out.append(f"inv2 vertex {v}: out-edge in forest {j} >= {2 * deg}")
        bits = d.occupancy_bits(v)
        occupied = {j // 2 for j in own}
        for pair in sorted(bits ^ occupied):
            out.append(f"inv3 vertex {v}: bit {pair} is {int(pair in bits)} but pair holds "
                       f"{int(pair in occupied)} out-edges")
        if d.top_bit(v) != max(occupied, default=-1):
            out.append(f"vertex {v}: top bit {d.top_bit(v)} != {max(occupied, default=-1)}")
    forests: dict[int, list[tuple[int, int]]] = {}
    for (u, v), j in slots.items():
        forests.setdefault(j, []).append((u, v))
    for j in range(d.slots_touched):
        es = forests.get(j, [])
        if not is_forest(es):
            out.append(f"forest {j} has a cycle")
        if d.forest_contents(j) != {(u, v) if u < v else (v, u) for u, v in es}:
            out.append(f"forest {j}: contents disagree with slot map")
    tails: dict[int, int] = {}
    for u, _ in directed:
        tails[u] = tails.get(u, 0) + 1
    limit = 2 * max(tails.values(), default=0)
    for j in forests:
        if j >= limit:
            out.append(f"forest {j} non-empty beyond 2D = {limit}")
    return out
