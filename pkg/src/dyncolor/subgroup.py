"""Implicit coloring with lazily refreshed colors on level subgroups.

Each group of ``L`` levels is cut into blocks ("subgroups") of ``J`` levels,
``J`` shrinking as the arboricity estimate grows.  Every subgroup owns its
own palette.  Updates only advance a clock; a query recomputes an outdated
color after first refreshing the outdated neighbours above it in the same
subgroup.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

from .explicit import ColorId, ExplicitColoring, palette_size
from .levels import Hierarchy


class SubgroupColor(NamedTuple):
    group: int
    subgroup: int
    index: int

    def render(self) -> str:
        return f"G{self.group}.S{self.subgroup}:{self.index}"


class ColorRecord(NamedTuple):
    color: SubgroupColor
    stamp: int


def subgroup_width(n: int, alpha: int, levels_per_group: int) -> int:
    """Levels per subgroup: ``floor(lg lg n / lg max(2, alpha))`` clamped to [1, L]."""
    lg = math.log2(n) if n > 1 else 0.0
    if lg <= 1.0:
        return 1
    width = math.floor(math.log2(lg) / math.log2(max(2, alpha)))
    return min(max(width, 1), levels_per_group)


class SubgroupColoring:
    def __init__(self, hierarchy: Hierarchy, alpha: Callable[[], int] | None = None) -> None:
        self.h = hierarchy
        self._alpha = alpha or hierarchy.arboricity_estimate
        self.t = 0
        blank = ColorRecord(SubgroupColor(0, 0, 0), 0)
        self._rec = [blank] * hierarchy.n
        self._width_at = -1
        self._width = 1
        self.last_refreshed: list[int] = []
        self.max_refreshes = 0

    def on_update(self) -> None:
        self.t += 1

    @property
    def width(self) -> int:
        """Subgroup width ``J`` for the current inter-update window."""
        if self._width_at != self.t:
            self._width = subgroup_width(self.h.n, self._alpha(), self.h.L)
            self._width_at = self.t
        return self._width

    def subgroup_of(self, level: int) -> tuple[int, int]:
        L = self.h.L
        g = (level - 1) // L
        return g, (level - 1 - g * L) // self.width

    def is_fresh(self, v: int) -> bool:
        return self._rec[v].stamp == self.t

    def record(self, v: int) -> ColorRecord:
        return self._rec[v]

    def query(self, v: int) -> ColorRecord:
        if not 0 <= v < self.h.n:
            raise IndexError(f"vertex {v} out of range [0, {self.h.n})")
        self.last_refreshed = []
        rec = self._refresh(v)
        if len(self.last_refreshed) > self.max_refreshes:
            self.max_refreshes = len(self.last_refreshed)
        return rec

    def _refresh(self, v: int) -> ColorRecord:
        rec = self._rec[v]
        t = self.t
        if rec.stamp == t:
            return rec
        level = self.h.levels
        L = self.h.L
        width = self.width
        i = level[v]
        g = (i - 1) // L
        j = (i - 1 - g * L) // width
        # levels above i that share v's subgroup
        ceiling = g * L + (j + 1) * width
        higher = []
        same = []
        for x in self.h.iter_same_or_above(v):
            lx = level[x]
            if lx == i:
                same.append(x)
            elif lx <= ceiling:
                higher.append(x)
        for x in higher:
            if self._rec[x].stamp != t:
                self._refresh(x)
        recs = self._rec
        taken = {recs[x].color.index for x in higher}
        taken.update(recs[x].color.index for x in same if recs[x].stamp == t)
        index = 0
        while index in taken:
            index += 1
        # at most 5 * 2**g neighbours are excluded, so index < palette_size(g)
        assert index < palette_size(g)
        rec = ColorRecord(SubgroupColor(g, j, index), t)
        recs[v] = rec
        self.last_refreshed.append(v)
        return rec


class CombinedColoring:
    """Subgroup coloring while ``alpha* <= lg(n) / 10``, explicit otherwise."""

    def __init__(self, subgroup: SubgroupColoring, explicit: ExplicitColoring) -> None:
        self.subgroup = subgroup
        self.explicit = explicit
        self.h: Hierarchy = subgroup.h

    def mode(self) -> str:
        n = self.h.n
        lg = math.log2(n) if n > 1 else 0.0
        return "subgroup" if self.h.arboricity_estimate() <= lg / 10 else "explicit"

    def query(self, v: int) -> tuple[str, SubgroupColor | ColorId]:
        if self.mode() == "subgroup":
            return ("subgroup", self.subgroup.query(v).color)
        return ("explicit", self.explicit.color_of(v))
