"""Forest decomposition driven by a stream of orientation changes.

Every out-edge of a vertex ``v`` occupies one slot pair ``(2l, 2l+1)`` with
``l < d(v)``, one pair per out-edge.  Within a pair the edge goes to the
forest in which its head has no out-edge.  Since every vertex then has at
most one out-edge per forest, no forest can close a cycle, and forests with
index ``>= 2 * max outdegree`` stay empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .levels import EventKind, MaxCounter, OrientationEvent


class ForestOp(str, Enum):
    INSERT = "insert"
    DELETE = "delete"


@dataclass(frozen=True, slots=True)
class ForestEdgeEvent:
    """Insertion or deletion of edge ``{tail, head}`` in forest ``forest``.

    ``tail`` is the vertex owning the edge as an out-edge.
    """

    op: ForestOp
    forest: int
    tail: int
    head: int


class InconsistentEvent(ValueError):
    """An orientation event that does not match the current edge set."""


class ArbDecomp:
    def __init__(self, n: int) -> None:
        self.n = n
        self._slot: dict[tuple[int, int], int] = {}
        # per vertex: forest index -> head of its out-edge there
        self._occ: list[dict[int, int]] = [{} for _ in range(n)]
        # per vertex: occupied slot pairs (sparse form of the n-bit array)
        self._bits: list[set[int]] = [set() for _ in range(n)]
        self._deg = MaxCounter(n)
        self._members: list[set[tuple[int, int]]] = []
        self._ops: list[ForestEdgeEvent] = []
        self.forest_ops = 0

    # -- queries -----------------------------------------------------------

    def top_bit(self, v: int) -> int:
        """Largest occupied slot pair of ``v``, or -1."""
        return self._deg.value[v] - 1

    def outdegree(self, v: int) -> int:
        return self._deg.value[v]

    def max_outdegree(self) -> int:
        return self._deg.max

    def active_forest_count(self) -> int:
        return 2 * self._deg.max

    @property
    def slots_touched(self) -> int:
        """One past the highest forest index ever used."""
        return len(self._members)

    def forest_contents(self, j: int) -> set[tuple[int, int]]:
        if not 0 <= j < 2 * self.n:
            raise IndexError(f"forest index {j} out of range [0, {2 * self.n})")
        if j >= len(self._members):
            return set()
        return set(self._members[j])

    def slot_of(self, u: int, v: int) -> int:
        j = self._slot.get((u, v))
        if j is None:
            j = self._slot.get((v, u))
        if j is None:
            raise KeyError(f"edge {{{u}, {v}}} not in any forest")
        return j

    def directed_edges(self) -> dict[tuple[int, int], int]:
        """Copy of the directed edge -> forest index map."""
        return dict(self._slot)

    def occupancy_bits(self, v: int) -> set[int]:
        return set(self._bits[v])

    def out_slots(self, v: int) -> dict[int, int]:
        return dict(self._occ[v])

    # -- updates -----------------------------------------------------------

    def apply(self, event: OrientationEvent) -> list[ForestEdgeEvent]:
        self._ops = ops = []
        t, h = event.tail, event.head
        if event.kind is EventKind.ADDED:
            if (t, h) in self._slot or (h, t) in self._slot:
                raise InconsistentEvent(f"added edge ({t}, {h}) already present")
            self._add_out_edge(t, h)
        elif event.kind is EventKind.REMOVED:
            if (t, h) not in self._slot:
                raise InconsistentEvent(f"removed edge ({t}, {h}) not present")
            self._drop_out_edge(t, h)
        else:
            if (h, t) not in self._slot:
                raise InconsistentEvent(f"flipped edge ({h}, {t}) not present")
            self._add_out_edge(t, h)
            self._drop_out_edge(h, t)
        self.forest_ops += len(ops)
        return ops

    def apply_all(self, events: list[OrientationEvent]) -> list[ForestEdgeEvent]:
        out: list[ForestEdgeEvent] = []
        for e in events:
            out.extend(self.apply(e))
        return out

    def _insert(self, j: int, u: int, v: int) -> None:
        self._slot[(u, v)] = j
        self._occ[u][j] = v
        while len(self._members) <= j:
            self._members.append(set())
        self._members[j].add((u, v) if u < v else (v, u))
        self._ops.append(ForestEdgeEvent(ForestOp.INSERT, j, u, v))

    def _remove(self, j: int, u: int, v: int) -> None:
        del self._slot[(u, v)]
        del self._occ[u][j]
        self._members[j].discard((u, v) if u < v else (v, u))
        self._ops.append(ForestEdgeEvent(ForestOp.DELETE, j, u, v))

    def _free_in_pair(self, pair: int, w: int) -> int:
        # even index wins when w has no out-edge in either forest
        j = 2 * pair
        return j if j not in self._occ[w] else j + 1

    def _add_out_edge(self, u: int, v: int) -> None:
        pair = self._deg.value[u]
        self._insert(self._free_in_pair(pair, v), u, v)
        self._bits[u].add(pair)
        self._deg.bump(u, 1)

    def _drop_out_edge(self, v: int, u: int) -> None:
        j = self._slot[(v, u)]
        gap = j // 2
        self._remove(j, v, u)
        self._bits[v].discard(gap)
        top = self._deg.value[v] - 1
        if top == gap:
            top -= 1
        if top > gap:
            jt = 2 * top if 2 * top in self._occ[v] else 2 * top + 1
            w = self._occ[v][jt]
            self._remove(jt, v, w)
            self._insert(self._free_in_pair(gap, w), v, w)
            self._bits[v].add(gap)
            self._bits[v].discard(top)
        self._deg.bump(v, -1)
