"""Level hierarchy maintaining an adaptive low-outdegree edge orientation.

Vertices live on levels ``1..k``.  Levels are blocked into groups of ``L``
consecutive levels; a vertex on a level of group ``g`` may have at most
``5 * 2**g`` neighbours on its own level or above (else it is promoted), and
must have at least ``2**g'`` neighbours on the level just below it or above,
``g'`` being the group of that lower level (else it is demoted).

Edges point from the lower-level endpoint to the higher one.  Ties on equal
levels are broken by vertex id: the smaller id is the tail.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator


class EventKind(str, Enum):
    ADDED = "added"
    REMOVED = "removed"
    FLIPPED = "flipped"


@dataclass(frozen=True, slots=True)
class OrientationEvent:
    """A change to the directed edge set.

    For ``ADDED`` and ``FLIPPED`` the pair ``(tail, head)`` is the new
    direction; a flip's prior direction is ``(head, tail)``.  For ``REMOVED``
    it is the direction the edge had when it was deleted.
    """

    kind: EventKind
    tail: int
    head: int

    @property
    def prior(self) -> tuple[int, int] | None:
        if self.kind is EventKind.FLIPPED:
            return (self.head, self.tail)
        return None


def ceil_lg(n: int) -> int:
    return (n - 1).bit_length()


class MaxCounter:
    """Histogram of small non-negative integers with O(1) amortised max.

    Values change by +-1 at a time, so the max pointer only ever walks one
    step per decrement.
    """

    __slots__ = ("value", "_hist", "max")

    def __init__(self, size: int) -> None:
        self.value = [0] * size
        self._hist = [size]
        self.max = 0

    def bump(self, x: int, delta: int) -> None:
        old = self.value[x]
        new = old + delta
        hist = self._hist
        hist[old] -= 1
        if new >= len(hist):
            hist.append(0)
        hist[new] += 1
        self.value[x] = new
        if new > self.max:
            self.max = new
        while self.max > 0 and hist[self.max] == 0:
            self.max -= 1


MoveListener = Callable[[int, int], None]


class Hierarchy:
    """Partition of ``n`` vertices into levels, restored after every update.

    ``insert_edge`` and ``delete_edge`` return the list of
    :class:`OrientationEvent` produced by the update, in emission order.
    Callables in ``move_listeners`` are invoked as ``f(vertex, new_level)``
    right after each level move, while the update is still settling.
    """

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"need at least one vertex, got n={n}")
        self.n = n
        lg = ceil_lg(n)
        self.L = 2 + lg
        self.k = max(1, self.L * lg)
        self._level = [1] * n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        # neighbours on levels >= own level
        self._up: list[set[int]] = [set() for _ in range(n)]
        # level -> neighbours on that level, only for levels below own level
        self._below: list[dict[int, set[int]]] = [{} for _ in range(n)]
        self._out = MaxCounter(n)
        self._m = 0
        self.move_listeners: list[MoveListener] = []
        self.level_moves = 0
        self.flips = 0
        self._events: list[OrientationEvent] = []
        self._promote: deque[int] = deque()
        self._demote: deque[int] = deque()
        self._queued: set[int] = set()

    # -- read-only views ---------------------------------------------------

    @property
    def num_edges(self) -> int:
        return self._m

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")

    def group_of(self, i: int) -> int:
        if not 1 <= i <= self.k:
            raise IndexError(f"level {i} out of range [1, {self.k}]")
        return (i - 1) // self.L

    def group_levels(self, g: int) -> range:
        return range(g * self.L + 1, (g + 1) * self.L + 1)

    def level_of(self, v: int) -> int:
        self._check_vertex(v)
        return self._level[v]

    @property
    def levels(self) -> list[int]:
        """Level per vertex.  Do not mutate."""
        return self._level

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nb in enumerate(self._adj):
            for v in nb:
                if u < v:
                    yield (u, v)

    def iter_same_or_above(self, v: int) -> Iterable[int]:
        """Neighbours of ``v`` on its own level or higher (a live view)."""
        return self._up[v]

    def same_or_above_neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return sorted(self._up[v])

    def neighbor_lists(self, v: int) -> tuple[dict[int, set[int]], set[int]]:
        """Copies of ``v``'s per-level lists below it and its upward list."""
        self._check_vertex(v)
        return ({i: set(s) for i, s in self._below[v].items()}, set(self._up[v]))

    def lists_view(self, v: int) -> tuple[dict[int, set[int]], set[int]]:
        """Live per-level lists of ``v``.  Do not mutate."""
        return (self._below[v], self._up[v])

    def tail_of(self, u: int, v: int) -> int:
        lu, lv = self._level[u], self._level[v]
        if lu != lv:
            return u if lu < lv else v
        return u if u < v else v

    def out_neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        lv = self._level[v]
        level = self._level
        return sorted(u for u in self._up[v] if level[u] > lv or (level[u] == lv and v < u))

    def outdegree(self, v: int) -> int:
        return self._out.value[v]

    def max_outdegree(self) -> int:
        return self._out.max

    def arboricity_estimate(self) -> int:
        # 2D upper-bounds the arboricity via the 2D-forest decomposition.
        return max(1, 2 * self._out.max)

    def inv1_cap(self, i: int) -> int:
        """Most neighbours on levels >= i a vertex on level i may have."""
        return 5 << ((i - 1) // self.L)

    def inv2_floor(self, i: int) -> int:
        """Fewest neighbours on levels >= i-1 a vertex on level i > 1 needs."""
        return 1 << ((i - 2) // self.L)

    # -- updates -----------------------------------------------------------

    def insert_edge(self, u: int, v: int) -> list[OrientationEvent]:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if v in self._adj[u]:
            raise ValueError(f"edge {{{u}, {v}}} already present")
        self._events = events = []
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1
        self._place(u, v)
        self._place(v, u)
        tail = self.tail_of(u, v)
        self._out.bump(tail, 1)
        events.append(OrientationEvent(EventKind.ADDED, tail, v if tail == u else u))
        self._schedule(u)
        self._schedule(v)
        self._settle()
        return events

    def delete_edge(self, u: int, v: int) -> list[OrientationEvent]:
        self._check_vertex(u)
        self._check_vertex(v)
        if v not in self._adj[u]:
            raise KeyError(f"edge {{{u}, {v}}} absent")
        self._events = events = []
        tail = self.tail_of(u, v)
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._m -= 1
        self._unplace(u, v)
        self._unplace(v, u)
        self._out.bump(tail, -1)
        events.append(OrientationEvent(EventKind.REMOVED, tail, v if tail == u else u))
        self._schedule(u)
        self._schedule(v)
        self._settle()
        return events

    def _place(self, x: int, y: int) -> None:
        ly = self._level[y]
        if ly >= self._level[x]:
            self._up[x].add(y)
        else:
            self._below[x].setdefault(ly, set()).add(y)

    def _unplace(self, x: int, y: int) -> None:
        ly = self._level[y]
        if ly >= self._level[x]:
            self._up[x].remove(y)
        else:
            bucket = self._below[x][ly]
            bucket.remove(y)
            if not bucket:
                del self._below[x][ly]

    def _status(self, v: int) -> int:
        """+1 if ``v`` must be promoted, -1 if demoted, 0 if clean."""
        i = self._level[v]
        up = len(self._up[v])
        if i < self.k and up > 5 << ((i - 1) // self.L):
            return 1
        if i > 1:
            below = self._below[v].get(i - 1)
            if up + (len(below) if below else 0) < 1 << ((i - 2) // self.L):
                return -1
        return 0

    def _schedule(self, v: int) -> None:
        if v in self._queued:
            return
        st = self._status(v)
        if st > 0:
            self._promote.append(v)
        elif st < 0:
            self._demote.append(v)
        else:
            return
        self._queued.add(v)

    def _settle(self) -> None:
        promote, demote, queued = self._promote, self._demote, self._queued
        while promote or demote:
            v = promote.popleft() if promote else demote.popleft()
            queued.discard(v)
            st = self._status(v)
            if st > 0:
                self._raise(v)
            elif st < 0:
                self._lower(v)

    def _flip(self, old_tail: int, old_head: int) -> None:
        self._out.bump(old_tail, -1)
        self._out.bump(old_head, 1)
        self.flips += 1
        self._events.append(OrientationEvent(EventKind.FLIPPED, old_head, old_tail))

    def _raise(self, v: int) -> None:
        level = self._level
        i = level[v]
        at_i: set[int] = set()
        above: set[int] = set()
        touched = []
        for u in self._up[v]:
            lu = level[u]
            if lu == i:
                at_i.add(u)
                if v < u:
                    self._flip(v, u)
            else:
                above.add(u)
                bucket = self._below[u][i]
                bucket.remove(v)
                if not bucket:
                    del self._below[u][i]
                if lu == i + 1:
                    self._up[u].add(v)
                    if u < v:
                        self._flip(v, u)
                    touched.append(u)
                else:
                    self._below[u].setdefault(i + 1, set()).add(v)
        if at_i:
            self._below[v][i] = at_i
        self._up[v] = above
        level[v] = i + 1
        self.level_moves += 1
        for f in self.move_listeners:
            f(v, i + 1)
        for u in touched:
            self._schedule(u)
        self._schedule(v)

    def _lower(self, v: int) -> None:
        level = self._level
        i = level[v]
        merged = self._below[v].pop(i - 1, set())
        for u in merged:
            if v < u:
                self._flip(u, v)
        touched = []
        for u in self._up[v]:
            lu = level[u]
            if lu == i:
                self._up[u].remove(v)
                self._below[u].setdefault(i - 1, set()).add(v)
                if u < v:
                    self._flip(u, v)
            else:
                bucket = self._below[u][i]
                bucket.remove(v)
                if not bucket:
                    del self._below[u][i]
                self._below[u].setdefault(i - 1, set()).add(v)
                if lu == i + 1:
                    touched.append(u)
        self._up[v].update(merged)
        level[v] = i - 1
        self.level_moves += 1
        for f in self.move_listeners:
            f(v, i - 1)
        for u in touched:
            self._schedule(u)
        self._schedule(v)
