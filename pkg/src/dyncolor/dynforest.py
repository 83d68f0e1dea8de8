"""Dynamic rooted forest with one marked root per tree.

Linking ``u`` to ``v`` unmarks the root of ``u``'s tree, so the merged tree
keeps ``v``'s root.  Cutting an edge leaves one side without its root; the
cut endpoint on that side becomes the new marked root.  Roots are tracked by
rooting the underlying link-cut tree at the marked vertex, which makes the
distance to the root a plain depth query.
"""

from __future__ import annotations

import os

try:
    if os.environ.get("DYNCOLOR_PURE_PYTHON"):
        raise ImportError("pure-Python kernel forced")
    from ._lct import LinkCut
    KERNEL = "cython"
except ImportError:
    from ._lct_py import LinkCut
    KERNEL = "python"


class DynForest:
    def __init__(self, n: int, kernel: type | None = None) -> None:
        self.n = n
        self._tree = (kernel or LinkCut)(n)
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._marked = bytearray(b"\x01" * n)
        self.num_edges = 0

    def _check(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise IndexError(f"vertex {u} out of range [0, {self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self._adj) for v in nb if u < v]

    def is_marked(self, u: int) -> bool:
        return bool(self._marked[u])

    def marked(self) -> list[int]:
        return [u for u in range(self.n) if self._marked[u]]

    def link(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v or self._tree.connected(u, v):
            raise ValueError(f"link({u}, {v}) would close a cycle")
        self._marked[self._tree.find_root(u)] = 0
        self._tree.link(u, v)
        self._adj[u].add(v)
        self._adj[v].add(u)
        self.num_edges += 1

    def cut(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if v not in self._adj[u]:
            raise KeyError(f"edge {{{u}, {v}}} absent")
        child = self._tree.cut(u, v)
        self._marked[child] = 1
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self.num_edges -= 1

    def root_of(self, u: int) -> int:
        self._check(u)
        if not self._adj[u]:
            return u
        return self._tree.find_root(u)

    def dist_to_root(self, u: int) -> int:
        self._check(u)
        if not self._adj[u]:
            return 0
        return self._tree.depth(u)

    def parity(self, u: int) -> int:
        """``dist_to_root(u) & 1`` without the range check."""
        return self._tree.depth(u) & 1 if self._adj[u] else 0

    def parities(self) -> bytes:
        """Root-distance parity of every vertex, in one kernel call."""
        return self._tree.parities()

    def same_tree(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return self._tree.connected(u, v)
