import itertools

import pytest

from dyncolor.levels import EventKind

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def replay(mirror: dict[frozenset, tuple[int, int]], events) -> None:
    """Apply orientation events to a naive ``{edge: (tail, head)}`` mirror."""
    for e in events:
        key = frozenset((e.tail, e.head))
        if e.kind is EventKind.ADDED:
            assert key not in mirror
            mirror[key] = (e.tail, e.head)
        elif e.kind is EventKind.REMOVED:
            assert mirror.pop(key) == (e.tail, e.head)
        else:
            assert mirror[key] == (e.head, e.tail)
            mirror[key] = (e.tail, e.head)


def min_max_outdegree(n: int, edges: list[tuple[int, int]]) -> int:
    """Smallest achievable max outdegree, by trying every orientation."""
    best = len(edges)
    for bits in itertools.product((0, 1), repeat=len(edges)):
        deg = [0] * n
        for (u, v), b in zip(edges, bits):
            deg[v if b else u] += 1
        best = min(best, max(deg, default=0))
    return best


@pytest.fixture
def star16():
    """Hierarchy on 16 vertices with centre 0 joined to leaves 1..6."""
    from dyncolor.levels import Hierarchy

    h = Hierarchy(16)
    log = []
    for leaf in range(1, 7):
        log.append(h.insert_edge(0, leaf))
    return h, log


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
