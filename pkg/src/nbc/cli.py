"""Command line entry point: ``nbc <command> ...``.

Exit status is 0 on success. ``verify`` and ``oracle`` also use it as the
yes/no answer: 0 for a balanced coloring / an existing split, 1 otherwise.
Errors exit with status 2 and a message on stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import bench, formats
from .gadgets import PartitionInstance, ReductionError, reduce_partition, split_values
from .graph import penalty
from .instances import random_even_graph, random_graph
from .solvers import (
    DEFAULT_EXACT_CAP,
    GaParams,
    TooLargeError,
    partition_oracle,
    solve_exact,
    solve_genetic,
    solve_random,
)


def _fmt_set(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


def cmd_gen(args) -> int:
    if args.even:
        g = random_even_graph(args.n, args.p, args.seed)
    else:
        g = random_graph(args.n, args.p, args.seed)
    formats.write_graph(g, args.out)
    print(f"vertices={g.n} edges={g.m}")
    return 0


def cmd_reduce(args) -> int:
    s = PartitionInstance.parse(args.items)
    g, layout = reduce_partition(s, anchored=args.anchored)
    formats.write_graph(g, args.out_graph)
    formats.write_layout(layout, args.out_layout)
    print(f"vertices={g.n} edges={g.m}")
    return 0


def cmd_solve(args) -> int:
    g = formats.read_graph(args.graph)
    if args.algo == "exact":
        res = solve_exact(g, cap=args.cap, workers=args.workers)
    elif args.algo == "ga":
        params = GaParams(args.generations, args.pop_size, args.mutation_rate, args.seed)
        res = solve_genetic(g, params)
    else:
        res = solve_random(g, args.seed)
    if args.trace:
        if res.trace is None:
            raise ValueError("--trace is only available for --algo ga")
        Path(args.trace).write_text(bench.format_trace(res.trace))
    if args.out:
        formats.write_coloring(res.best, args.out)
    else:
        print(res.best.to_string())
    print(res.summary())
    return 0


def cmd_verify(args) -> int:
    g = formats.read_graph(args.graph)
    c = formats.read_coloring(args.coloring, g.n)
    rep = penalty(g, c)
    print(f"penalty={rep.total}")
    for v in rep.unbalanced():
        print(f"vertex {v}: red={rep.red[v]} blue={rep.blue[v]}")
    return 0 if rep.total == 0 else 1


def cmd_oracle(args) -> int:
    s = PartitionInstance.parse(args.items)
    split = partition_oracle(s)
    if split is None:
        print("no partition")
        return 1
    s1, s2 = split_values(s.items, split)
    print(f"S1 = {_fmt_set(s1)}, S2 = {_fmt_set(s2)}")
    return 0


def cmd_bench(args) -> int:
    cfg = bench.parse_config(Path(args.config).read_text())
    if args.workers is not None:
        cfg = replace(cfg, workers=args.workers)
    records = bench.run_benchmark(cfg)
    Path(args.out).write_text(bench.format_records(cfg, records))
    print(f"records={len(records)}")
    return 0


def cmd_summarize(args) -> int:
    text = bench.format_summary(bench.summarize(bench.read_records(args.results)))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_export_dot(args) -> int:
    g = formats.read_graph(args.graph)
    c = formats.read_coloring(args.coloring, g.n) if args.coloring else None
    layout = formats.read_layout(args.layout) if args.layout else None
    Path(args.out).write_text(formats.to_dot(g, c, layout))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nbc", description="Neighborhood balanced coloring toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a seeded random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--even", action="store_true", help="every vertex gets even degree")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="build the NBC instance for a PARTITION instance")
    p.add_argument("items", help="comma-separated positive integers, e.g. 1,4,3")
    p.add_argument("--out-graph", required=True)
    p.add_argument("--out-layout", required=True)
    p.add_argument("--anchored", action="store_true", help="add w1, w2 forcing u1 and u2 apart")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="minimize the penalty of a graph")
    p.add_argument("--algo", choices=("exact", "ga", "random"), required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pop-size", type=int, default=100)
    p.add_argument("--generations", type=int, default=500)
    p.add_argument("--mutation-rate", type=float, default=0.02)
    p.add_argument("--trace", help="CSV file for the GA trace")
    p.add_argument("--cap", type=int, default=DEFAULT_EXACT_CAP, help="max vertices for exact")
    p.add_argument("--workers", type=int, default=1, help="threads for exact")
    p.add_argument("--out", help="write the coloring here instead of stdout")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring; exit 0 iff balanced")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force equal-sum split; exit 0 iff one exists")
    p.add_argument("items")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="run a benchmark configuration")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("summarize", help="per-size statistics of a benchmark CSV")
    p.add_argument("results")
    p.add_argument("--out")
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("export-dot", help="render a graph as Graphviz DOT")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring")
    p.add_argument("--layout", help="reduction layout, marks numeric vertices")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ReductionError, TooLargeError) as exc:
        print(f"nbc {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
