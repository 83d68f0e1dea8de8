"""Command-line stream driver.

Run a stream::

    dyncolor --input stream.txt --algorithm implicit-parity --verify --stats-out stats.json

Generate one (written to stdout, or ``--output``)::

    dyncolor --generate random --n 64 --m 1000 --seed 7 > stream.txt
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Iterable

from .explicit import ColorId
from .parity import ParityVector
from .pipeline import ALGORITHMS, AuditFailure, Pipeline, RunStats
from .streams import KINDS, Command, StreamError, generate, parse, render
from .subgroup import SubgroupColor

VERIFY_EVERY_UPDATE_MAX_N = 256


class RunError(RuntimeError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def render_color(color) -> str:
    if isinstance(color, ParityVector):
        return color.render()
    if isinstance(color, SubgroupColor):
        return color.render()
    if isinstance(color, ColorId):
        return f"L{color.level}:{color.index}"
    mode, inner = color
    return f"{mode} {render_color(inner)}"


def run(
    n: int,
    commands: Iterable[Command],
    *,
    seed: int = 0,
    algorithm: str = "auto",
    verify: bool = False,
    out: IO[str] | None = None,
) -> RunStats:
    """Apply ``commands`` in order; query results go to ``out``."""
    p = Pipeline(n, seed=seed, algorithm=algorithm)
    every_update = verify and n <= VERIFY_EVERY_UPDATE_MAX_N
    for c in commands:
        try:
            if c.op == "+":
                p.insert(c.u, c.v)
            elif c.op == "-":
                p.delete(c.u, c.v)
            elif c.op == "?":
                color = p.query(c.u)
                if out is not None:
                    out.write(f"{c.u} {render_color(color)}\n")
                continue
            if c.op == "!" or every_update:
                p.verify()
        except AuditFailure:
            p.finish_stats()
            raise
        except (KeyError, ValueError, IndexError) as exc:
            msg = exc.args[0] if exc.args else str(exc)
            raise RunError(c.line, str(msg)) from exc
    return p.finish_stats()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dyncolor", description=__doc__.split("\n\n")[0])
    ap.add_argument("--input", default="-", help="stream file, or - for stdin")
    ap.add_argument("--n", type=int, help="vertex count (overrides the stream header)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    ap.add_argument("--verify", action="store_true",
                    help=f"audit after every update when n <= {VERIFY_EVERY_UPDATE_MAX_N}")
    ap.add_argument("--stats-out", help="write run statistics (JSON) here; - for stdout")
    ap.add_argument("--generate", choices=KINDS, help="emit a synthetic stream instead of running one")
    ap.add_argument("--m", type=int, default=1000, help="updates to generate")
    ap.add_argument("--output", help="where query results (or a generated stream) go; default stdout")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if args.generate:
            if args.n is None:
                print("error: --generate needs --n", file=sys.stderr)
                return 2
            cmds = generate(args.generate, args.n, args.m, args.seed)
            for line in render(args.n, cmds):
                out.write(line + "\n")
            return 0
        src = sys.stdin if args.input == "-" else open(args.input)
        try:
            n, cmds = parse(src, n=args.n)
        finally:
            if src is not sys.stdin:
                src.close()
        try:
            stats = run(n, cmds, seed=args.seed, algorithm=args.algorithm,
                        verify=args.verify, out=out)
        except AuditFailure as exc:
            print("audit failed:", file=sys.stderr)
            for v in exc.violations:
                print(f"  {v}", file=sys.stderr)
            return 3
        if args.stats_out:
            doc = json.dumps(stats.as_dict(), indent=2, sort_keys=True)
            if args.stats_out == "-":
                out.write(doc + "\n")
            else:
                with open(args.stats_out, "w") as fh:
                    fh.write(doc + "\n")
        return 0
    except (StreamError, RunError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
