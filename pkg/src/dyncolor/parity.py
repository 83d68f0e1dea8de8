"""Implicit coloring by root-distance parities across the forest decomposition."""

from __future__ import annotations

from typing import Callable, NamedTuple

from .arbdecomp import ForestEdgeEvent, ForestOp
from .dynforest import DynForest


class ParityVector(NamedTuple):
    """Bit ``j`` is the parity of the distance to the root in forest ``j``."""

    r: int
    bits: tuple[int, ...]

    def as_int(self) -> int:
        return sum(b << j for j, b in enumerate(self.bits))

    def render(self) -> str:
        return f"({self.r}, {self.as_int()})"


class ParityColoring:
    """One :class:`DynForest` per forest slot, created on first use.

    ``forest_count`` supplies the number ``r`` of active forests at query
    time, normally ``ArbDecomp.active_forest_count``.
    """

    def __init__(self, n: int, forest_count: Callable[[], int]) -> None:
        self.n = n
        self._forest_count = forest_count
        self._forests: list[DynForest | None] = []

    def forest(self, j: int) -> DynForest | None:
        return self._forests[j] if j < len(self._forests) else None

    def on_forest_event(self, e: ForestEdgeEvent) -> None:
        j = e.forest
        if not 0 <= j < 2 * self.n:
            raise IndexError(f"forest index {j} out of range [0, {2 * self.n})")
        while len(self._forests) <= j:
            self._forests.append(None)
        f = self._forests[j]
        if f is None:
            f = self._forests[j] = DynForest(self.n)
        if e.op is ForestOp.INSERT:
            f.link(e.tail, e.head)
        else:
            f.cut(e.tail, e.head)

    def query(self, u: int) -> ParityVector:
        if not 0 <= u < self.n:
            raise IndexError(f"vertex {u} out of range [0, {self.n})")
        r = self._forest_count()
        forests = self._forests
        have = min(r, len(forests))
        bits = [f.parity(u) if f is not None else 0 for f in forests[:have]]
        bits.extend([0] * (r - have))
        return ParityVector(r, tuple(bits))

    def query_all(self) -> list[ParityVector]:
        """``[query(u) for u in range(n)]`` with one pass per forest."""
        r = self._forest_count()
        cols = [f.parities() if f is not None else bytes(self.n) for f in self._forests[:r]]
        pad = (0,) * (r - len(cols))
        if not cols:
            return [ParityVector(r, pad)] * self.n
        return [ParityVector(r, bits + pad) for bits in zip(*cols)]
