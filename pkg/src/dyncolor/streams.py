"""Update/query stream grammar and synthetic stream generators.

Grammar, one command per line, whitespace separated::

    n <count>        first non-comment line
    + u v            insert edge
    - u v            delete edge
    ? u              query the color of u
    !                checkpoint (run the oracle audits)
    # ...            comment
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, NamedTuple


class StreamError(ValueError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class Command(NamedTuple):
    op: str  # one of "+", "-", "?", "!"
    u: int = -1
    v: int = -1
    line: int = 0


_ARITY = {"+": 2, "-": 2, "?": 1, "!": 0}


def parse(lines: Iterable[str], n: int | None = None) -> tuple[int, list[Command]]:
    """Parse a stream; ``n`` overrides the header's vertex count."""
    header: int | None = None
    commands: list[Command] = []
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        if header is None:
            parts = text.split()
            if len(parts) != 2 or parts[0] != "n":
                raise StreamError(lineno, f"expected header 'n <count>', got {text!r}")
            try:
                header = int(parts[1])
            except ValueError:
                raise StreamError(lineno, f"bad vertex count {parts[1]!r}") from None
            if n is None and header < 1:
                raise StreamError(lineno, f"vertex count must be positive, got {header}")
            continue
        op, rest = text[0], text[1:].split()
        if op not in _ARITY:
            raise StreamError(lineno, f"unknown command {op!r}")
        if len(rest) != _ARITY[op]:
            raise StreamError(lineno, f"{op!r} takes {_ARITY[op]} argument(s), got {len(rest)}")
        try:
            ids = [int(tok) for tok in rest]
        except ValueError:
            raise StreamError(lineno, f"non-integer vertex id in {text!r}") from None
        commands.append(Command(op, *ids, line=lineno) if ids else Command(op, line=lineno))
    if header is None and n is None:
        raise StreamError(0, "empty stream: missing 'n <count>' header")
    count = n if n is not None else header
    if count < 1:
        raise StreamError(0, f"vertex count must be positive, got {count}")
    for c in commands:
        for x in (c.u, c.v):
            if x != -1 and not 0 <= x < count:
                raise StreamError(c.line, f"vertex {x} out of range [0, {count})")
        if c.op in "+-" and c.u == c.v:
            raise StreamError(c.line, f"self-loop at {c.u}")
    return count, commands


def render(n: int, commands: Iterable[Command]) -> Iterator[str]:
    yield f"n {n}"
    for c in commands:
        if c.op in "+-":
            yield f"{c.op} {c.u} {c.v}"
        elif c.op == "?":
            yield f"? {c.u}"
        else:
            yield "!"


# -- generators ---------------------------------------------------------------

KINDS = ("random", "densify-then-thin", "forest-only")


def random_stream(n: int, m: int, seed: int, target_edges: int | None = None) -> list[Command]:
    """``m`` random updates whose edge count hovers around ``target_edges``.

    Each step inserts with probability ``target / (target + |E|)``, so the
    graph settles near ``target`` edges (default ``2n``).
    """
    rng = random.Random(seed)
    if n < 2:
        return []
    full = n * (n - 1) // 2
    target = min(target_edges if target_edges is not None else 2 * n, full)
    present: list[tuple[int, int]] = []
    where: dict[tuple[int, int], int] = {}
    out: list[Command] = []
    for _ in range(m):
        k = len(present)
        insert = k == 0 or (k < full and rng.random() < target / (target + k))
        if insert:
            while True:
                u, v = rng.randrange(n), rng.randrange(n)
                if u == v:
                    continue
                e = (min(u, v), max(u, v))
                if e not in where:
                    break
            where[e] = len(present)
            present.append(e)
            out.append(Command("+", e[0], e[1]))
        else:
            idx = rng.randrange(k)
            e = present[idx]
            last = present.pop()
            if idx < len(present):
                present[idx] = last
                where[last] = idx
            del where[e]
            out.append(Command("-", e[0], e[1]))
    return out


def densify_then_thin(n: int, m: int, seed: int) -> list[Command]:
    """Insert ``min(m, n(n-1)/2)`` random pairs, then delete down to a spanning forest."""
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    inserted = pairs[:m]
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    keep = set()
    for u, v in inserted:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            keep.add((u, v))
    doomed = [e for e in inserted if e not in keep]
    rng.shuffle(doomed)
    return [Command("+", u, v) for u, v in inserted] + [Command("-", u, v) for u, v in doomed]


def forest_only(n: int, m: int, seed: int) -> list[Command]:
    """``m`` random updates that never close a cycle."""
    rng = random.Random(seed)
    if n < 2:
        return []
    adj: list[set[int]] = [set() for _ in range(n)]
    present: list[tuple[int, int]] = []
    out: list[Command] = []

    def connected(a: int, b: int) -> bool:
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            if x == b:
                return True
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    for _ in range(m):
        can_insert = len(present) < n - 1
        if can_insert and (not present or rng.random() < 0.6):
            while True:
                u, v = rng.randrange(n), rng.randrange(n)
                if u != v and not connected(u, v):
                    break
            e = (min(u, v), max(u, v))
            adj[u].add(v)
            adj[v].add(u)
            present.append(e)
            out.append(Command("+", *e))
        else:
            e = present.pop(rng.randrange(len(present)))
            adj[e[0]].discard(e[1])
            adj[e[1]].discard(e[0])
            out.append(Command("-", *e))
    return out


def generate(kind: str, n: int, m: int, seed: int) -> list[Command]:
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if kind == "random":
        return random_stream(n, m, seed)
    if kind == "densify-then-thin":
        return densify_then_thin(n, m, seed)
    if kind == "forest-only":
        return forest_only(n, m, seed)
    raise ValueError(f"unknown stream kind {kind!r}; pick one of {KINDS}")
