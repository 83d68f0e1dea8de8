"""Compiled vs pure-Python link-cut kernel on random forest workloads.

    python3 benchmarks/bench_lct.py
    python3 benchmarks/bench_lct.py --sizes 256 65536 --ops 50000 --json out.json

Each workload is a fixed random sequence of link, cut and depth queries
(shared by both kernels), driven through :class:`DynForest` so the numbers
include the wrapper the colorings actually use.
"""

from __future__ import annotations

import argparse
import json
import random
import time

from dyncolor import dynforest
from dyncolor._lct_py import LinkCut as PyLinkCut
from dyncolor.dynforest import DynForest


def workload(n: int, ops: int, seed: int) -> list[tuple[str, int, int]]:
    """Replayable ops, generated against a live forest so every link is acyclic."""
    rng = random.Random(seed)
    mirror = DynForest(n)
    edges: list[tuple[int, int]] = []
    out: list[tuple[str, int, int]] = []
    while len(out) < ops:
        r = rng.random()
        if r < 0.5:
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v or mirror.same_tree(u, v):
                continue
            mirror.link(u, v)
            edges.append((u, v))
            out.append(("link", u, v))
        elif r < 0.7 and edges:
            i = rng.randrange(len(edges))
            edges[i], edges[-1] = edges[-1], edges[i]
            u, v = edges.pop()
            mirror.cut(u, v)
            out.append(("cut", u, v))
        else:
            out.append(("depth", rng.randrange(n), 0))
    return out


def time_kernel(kernel, n: int, ops: list[tuple[str, int, int]]) -> float:
    f = DynForest(n, kernel)
    link, cut, depth = f.link, f.cut, f.dist_to_root
    start = time.perf_counter()
    for op, u, v in ops:
        if op == "link":
            link(u, v)
        elif op == "cut":
            cut(u, v)
        else:
            depth(u)
    return time.perf_counter() - start


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[2**8, 2**12, 2**16])
    ap.add_argument("--ops", type=int, default=20_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", help="also write results here")
    args = ap.parse_args(argv)

    kernels = {"python": PyLinkCut}
    if dynforest.KERNEL == "cython":
        from dyncolor._lct import LinkCut as CyLinkCut

        kernels["cython"] = CyLinkCut
    else:
        print("compiled kernel unavailable; timing the pure-Python kernel only")

    rows = []
    print(f"{'n':>8} {'kernel':>8} {'us/op':>9} {'speedup':>8}")
    for n in args.sizes:
        ops = workload(n, args.ops, args.seed + n)
        base = None
        for name, k in kernels.items():
            secs = time_kernel(k, n, ops)
            per = 1e6 * secs / len(ops)
            base = base or per
            rows.append({"n": n, "kernel": name, "ops": len(ops), "seconds": secs, "us_per_op": per})
            print(f"{n:>8} {name:>8} {per:>9.2f} {base / per:>7.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
