"""Update pipeline: hierarchy -> forest decomposition -> colorings."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .arbdecomp import ArbDecomp
from .explicit import ExplicitColoring
from .levels import Hierarchy
from .oracles import (
    MAX_EXACT_N,
    SnapshotGraph,
    audit_decomp,
    audit_levels,
    exact_arboricity,
    is_proper,
)
from .parity import ParityColoring
from .subgroup import CombinedColoring, SubgroupColoring

ALGORITHMS = ("explicit", "implicit-parity", "implicit-subgroup", "auto")


@dataclass
class RunStats:
    updates: int = 0
    queries: int = 0
    distinct_colors: dict[str, int] = field(default_factory=dict)
    explicit_colors_in_use: int = 0
    explicit_colors_ever: int = 0
    max_outdegree: int = 0
    active_forest_count: int = 0
    level_moves: int = 0
    orientation_flips: int = 0
    forest_events: int = 0
    refresh_counts: dict[str, int] = field(default_factory=dict)
    verification: str = "skipped"
    checks: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


class AuditFailure(RuntimeError):
    def __init__(self, violations: list[str]) -> None:
        super().__init__(f"{len(violations)} violation(s): " + "; ".join(violations[:5]))
        self.violations = violations


class Pipeline:
    """All structures for one graph, updated in lock-step.

    ``algorithm`` picks which colorings are maintained; ``maintain_all``
    keeps every coloring regardless.
    """

    def __init__(self, n: int, seed: int = 0, algorithm: str = "auto", maintain_all: bool = False) -> None:
        if algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algorithm!r}; pick one of {ALGORITHMS}")
        self.n = n
        self.algorithm = algorithm
        self.h = Hierarchy(n)
        self.decomp = ArbDecomp(n)
        want = set(ALGORITHMS) if maintain_all else {algorithm}
        self.explicit = ExplicitColoring(self.h, seed) if want & {"explicit", "auto"} else None
        self.parity = ParityColoring(n, self.decomp.active_forest_count) if "implicit-parity" in want else None
        self.subgroup = SubgroupColoring(self.h) if want & {"implicit-subgroup", "auto"} else None
        self.combined = CombinedColoring(self.subgroup, self.explicit) if "auto" in want else None
        self.stats = RunStats()
        self._seen: dict[str, set] = {}
        self._refreshes: list[int] = []

    # -- updates -----------------------------------------------------------

    def _propagate(self, events) -> None:
        forest_events = self.decomp.apply_all(events)
        if self.parity is not None:
            for e in forest_events:
                self.parity.on_forest_event(e)
        if self.subgroup is not None:
            self.subgroup.on_update()
        s = self.stats
        s.updates += 1
        s.forest_events += len(forest_events)
        s.max_outdegree = max(s.max_outdegree, self.h.max_outdegree())
        s.active_forest_count = self.decomp.active_forest_count()
        s.level_moves = self.h.level_moves
        s.orientation_flips = self.h.flips

    def insert(self, u: int, v: int) -> None:
        events = self.h.insert_edge(u, v)
        if self.explicit is not None:
            self.explicit.on_edge_inserted(u, v)
        self._propagate(events)

    def delete(self, u: int, v: int) -> None:
        self._propagate(self.h.delete_edge(u, v))

    # -- queries -----------------------------------------------------------

    def query(self, u: int, algorithm: str | None = None):
        alg = algorithm or self.algorithm
        if alg == "explicit":
            color = self.explicit.color_of(u)
        elif alg == "implicit-parity":
            color = self.parity.query(u)
        elif alg == "implicit-subgroup":
            color = self.subgroup.query(u).color
            self._refreshes.append(len(self.subgroup.last_refreshed))
        elif alg == "auto":
            color = self.combined.query(u)
            if color[0] == "subgroup":
                self._refreshes.append(len(self.subgroup.last_refreshed))
        else:
            raise ValueError(f"unknown algorithm {alg!r}")
        self.stats.queries += 1
        self._seen.setdefault(alg, set()).add(color)
        self.stats.distinct_colors[alg] = len(self._seen[alg])
        if self._refreshes:
            r = self._refreshes
            self.stats.refresh_counts = {"queries": len(r), "total": sum(r), "max": max(r)}
        return color

    def snapshot(self) -> SnapshotGraph:
        return SnapshotGraph(self.n, tuple(sorted(self.h.edges())))

    def finish_stats(self) -> RunStats:
        if self.explicit is not None:
            self.stats.explicit_colors_in_use = self.explicit.colors_in_use()
            self.stats.explicit_colors_ever = len(self.explicit.ever_used)
        return self.stats

    # -- verification ------------------------------------------------------

    def audit(self) -> list[str]:
        """Run every applicable oracle; returns the violations found."""
        h, d = self.h, self.decomp
        out = audit_levels(h)
        level = h.levels
        oriented = [(u, v) if (level[u], u) < (level[v], v) else (v, u) for u, v in h.edges()]
        out += audit_decomp(d, oriented)
        g = self.snapshot()
        if self.explicit is not None and not is_proper(g, self.explicit.colors()):
            out.append("explicit coloring is not proper")
        if self.parity is not None:
            colors = self.parity.query_all()
            if not is_proper(g, colors):
                out.append("parity coloring is not proper")
            if len(set(colors)) > 2 ** d.active_forest_count():
                out.append("more parity vectors than 2^(2D)")
        if self.subgroup is not None:
            colors = [self.subgroup.query(v).color for v in range(self.n)]
            if not is_proper(g, colors):
                out.append("subgroup coloring is not proper")
        if self.n <= MAX_EXACT_N:
            out += alpha_checks(h, g)
        self.stats.checks += 1
        return out

    def verify(self) -> None:
        violations = self.audit()
        if violations:
            self.stats.verification = "fail"
            raise AuditFailure(violations)
        self.stats.verification = "pass"


def alpha_checks(h: Hierarchy, g: SnapshotGraph) -> list[str]:
    """Outdegree, empty-group and estimate bounds against the exact arboricity."""
    out = []
    alpha = exact_arboricity(g)
    if h.max_outdegree() > 40 * max(alpha, 1) and alpha > 0:
        out.append(f"max outdegree {h.max_outdegree()} > 40 * alpha = {40 * alpha}")
    if alpha == 0 and h.max_outdegree() != 0:
        out.append("edgeless graph with non-zero outdegree")
    if alpha > 0:
        top = (4 * alpha - 1).bit_length()  # ceil(lg(4 alpha))
        for v in range(h.n):
            if (h.level_of(v) - 1) // h.L > top:
                out.append(f"vertex {v} on level {h.level_of(v)} in a group above {top}")
        est = h.arboricity_estimate()
        if not alpha <= est <= 80 * alpha:
            out.append(f"estimate {est} outside [{alpha}, {80 * alpha}]")
    return out
