"""Explicit coloring with a private palette per level.

A level in group ``g`` owns ``palette_size(g)`` colors.  Same-level
neighbours number at most ``5 * 2**g`` once the hierarchy is settled, so at
least ``max(1, ceil(2**g / 10))`` colors are always free.
"""

from __future__ import annotations

import random
from collections import Counter
from typing import NamedTuple

from .levels import Hierarchy


def palette_size(group: int) -> int:
    base = 1 << group
    return 5 * base + max(1, -(-base // 10))


class ColorId(NamedTuple):
    level: int
    index: int


class ExplicitColoring:
    """Stores a proper coloring, refreshed by level moves and edge insertions.

    Construction registers a move listener on ``hierarchy``; call
    :meth:`on_edge_inserted` after each insertion has settled.
    """

    def __init__(self, hierarchy: Hierarchy, seed: int | None = 0) -> None:
        self.h = hierarchy
        self.rng = random.Random(seed)
        n = hierarchy.n
        p0 = palette_size(0)
        self._color = [ColorId(1, self.rng.randrange(p0)) for _ in range(n)]
        # initial colors get distinct stamps in vertex order
        self._stamp = list(range(1, n + 1))
        self._clock = n
        self._in_use = Counter(self._color)
        self.ever_used: set[ColorId] = set(self._in_use)
        self.recolors = 0
        self.conflicts = 0
        self.starved = 0
        hierarchy.move_listeners.append(self.on_vertex_moved)

    def color_of(self, v: int) -> ColorId:
        return self._color[v]

    def colors(self) -> list[ColorId]:
        return list(self._color)

    def stamp_of(self, v: int) -> int:
        return self._stamp[v]

    def colors_in_use(self) -> int:
        return len(self._in_use)

    def _recolor(self, w: int) -> None:
        h = self.h
        level = h.levels
        i = level[w]
        size = palette_size(h.group_of(i))
        taken = {self._color[x].index for x in h.iter_same_or_above(w) if level[x] == i}
        free = [p for p in range(size) if p not in taken]
        if not free:
            # only reachable mid-settle while w is still over its cap and
            # about to be promoted again
            self.starved += 1
            free = list(range(size))
        new = ColorId(i, self.rng.choice(free))
        old = self._color[w]
        self._in_use[old] -= 1
        if not self._in_use[old]:
            del self._in_use[old]
        self._in_use[new] += 1
        self.ever_used.add(new)
        self._color[w] = new
        self._clock += 1
        self._stamp[w] = self._clock
        self.recolors += 1

    def on_vertex_moved(self, w: int, new_level: int) -> None:
        self._recolor(w)

    def on_edge_inserted(self, u: int, v: int) -> None:
        if self._color[u] != self._color[v]:
            return
        # equal ColorIds imply equal levels
        self.conflicts += 1
        self._recolor(u if self._stamp[u] < self._stamp[v] else v)
