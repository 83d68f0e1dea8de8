"""Pure-Python link-cut tree kernel (fallback for the compiled ``_lct``).

Nodes are ``0..n-1`` externally and ``1..n`` internally; 0 is the null node.
Each represented tree is rooted; ``depth`` counts edges to that root.
"""

from __future__ import annotations


class LinkCut:
    __slots__ = ("n", "_l", "_r", "_p", "_rev", "_sz")

    def __init__(self, n: int) -> None:
        self.n = n
        self._l = [0] * (n + 1)
        self._r = [0] * (n + 1)
        self._p = [0] * (n + 1)
        self._rev = [False] * (n + 1)
        self._sz = [1] * (n + 1)
        self._sz[0] = 0

    def _is_root(self, x: int) -> bool:
        p = self._p[x]
        return p == 0 or (self._l[p] != x and self._r[p] != x)

    def _push(self, x: int) -> None:
        if self._rev[x]:
            l, r = self._l[x], self._r[x]
            self._l[x], self._r[x] = r, l
            if l:
                self._rev[l] = not self._rev[l]
            if r:
                self._rev[r] = not self._rev[r]
            self._rev[x] = False

    def _rotate(self, x: int) -> None:
        L, R, P, sz = self._l, self._r, self._p, self._sz
        p = P[x]
        g = P[p]
        if not self._is_root(p):
            if L[g] == p:
                L[g] = x
            else:
                R[g] = x
        P[x] = g
        if L[p] == x:
            b = R[x]
            L[p] = b
            if b:
                P[b] = p
            R[x] = p
        else:
            b = L[x]
            R[p] = b
            if b:
                P[b] = p
            L[x] = p
        P[p] = x
        sz[p] = 1 + sz[L[p]] + sz[R[p]]
        sz[x] = 1 + sz[L[x]] + sz[R[x]]

    def _splay(self, x: int) -> None:
        stack = [x]
        y = x
        while not self._is_root(y):
            y = self._p[y]
            stack.append(y)
        for y in reversed(stack):
            self._push(y)
        L, P = self._l, self._p
        while not self._is_root(x):
            p = P[x]
            if not self._is_root(p):
                g = P[p]
                if (L[g] == p) == (L[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, x: int) -> None:
        last = 0
        y = x
        R, P, L, sz = self._r, self._p, self._l, self._sz
        while y:
            self._splay(y)
            R[y] = last
            sz[y] = 1 + sz[L[y]] + sz[last]
            last = y
            y = P[y]
        self._splay(x)

    def _find_root(self, x: int) -> int:
        self._access(x)
        L = self._l
        self._push(x)
        while L[x]:
            x = L[x]
            self._push(x)
        self._splay(x)
        return x

    def find_root(self, u: int) -> int:
        return self._find_root(u + 1) - 1

    def connected(self, u: int, v: int) -> bool:
        return u == v or self._find_root(u + 1) == self._find_root(v + 1)

    def depth(self, u: int) -> int:
        x = u + 1
        self._access(x)
        return self._sz[self._l[x]]

    def parities(self) -> bytes:
        """``depth(u) & 1`` for every vertex."""
        return bytes(self.depth(u) & 1 for u in range(self.n))

    def evert(self, u: int) -> None:
        x = u + 1
        self._access(x)
        self._rev[x] = not self._rev[x]

    def link(self, u: int, v: int) -> None:
        """Reroot ``u``'s tree at ``u`` and hang it below ``v``.

        The caller guarantees ``u`` and ``v`` are in different trees.
        """
        x = u + 1
        self.evert(u)
        self._p[x] = v + 1

    def cut(self, u: int, v: int) -> int:
        """Remove tree edge ``{u, v}``; returns the endpoint that was the child.

        The caller guarantees the edge is present.
        """
        child = u if self.depth(u) > self.depth(v) else v
        x = child + 1
        self._access(x)
        left = self._l[x]
        self._p[left] = 0
        self._l[x] = 0
        self._sz[x] = 1 + self._sz[self._r[x]]
        return child
