"""Seeded comparison runs of the exact, genetic and random solvers.

Every (size, trial) cell draws one G(n, p) graph and hands it to each
scheduled algorithm. Seeds come from the master seed through
``numpy.random.SeedSequence`` keyed by ``(size, trial, stream)``, so any
cell can be rerun in isolation and the whole table is reproducible.
"""

from __future__ import annotations

import configparser
import csv
import io
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .graph import Graph
from .instances import random_graph
from .solvers import GaParams, solve_exact, solve_genetic, solve_random

ALGORITHMS = ("exact", "ga", "random")
CSV_COLUMNS = ("size", "trial", "algorithm", "penalty", "wall_time_ms", "seed", "edges")
SUMMARY_COLUMNS = ("size", "algorithm", "trials", "mean_penalty", "median_penalty",
                   "min_penalty", "max_penalty")

_GRAPH, _GA, _RANDOM = 0, 1, 2


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple[int, ...]
    trials_per_size: int = 10
    p: float = 0.5
    algorithms: tuple[str, ...] = ALGORITHMS
    ga_params: GaParams = field(default_factory=GaParams)
    seed: int = 0
    exact_cap: int = 25
    workers: int = 1

    def __post_init__(self):
        if not self.sizes:
            raise ValueError("sizes must be nonempty")
        if any(n < 1 for n in self.sizes):
            raise ValueError("sizes must be positive")
        if self.trials_per_size < 1:
            raise ValueError("trials_per_size must be >= 1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown or not self.algorithms:
            raise ValueError(f"algorithms must be a nonempty subset of {ALGORITHMS}")
        if "exact" in self.algorithms and max(self.sizes) > self.exact_cap:
            raise ValueError(
                f"exact scheduled for n={max(self.sizes)} beyond exact_cap={self.exact_cap}"
            )

    def header(self) -> dict:
        gp = self.ga_params
        return {
            "sizes": ",".join(map(str, self.sizes)),
            "trials_per_size": self.trials_per_size,
            "p": self.p,
            "model": "erdos-renyi G(n,p)",
            "algorithms": ",".join(self.algorithms),
            "pop_size": gp.pop_size,
            "itt_count": gp.itt_count,
            "mutation_rate": gp.mutation_rate,
            "seed": self.seed,
            "exact_cap": self.exact_cap,
        }


@dataclass(frozen=True)
class BenchRecord:
    size: int
    trial: int
    algorithm: str
    penalty: int
    wall_time: float  # seconds
    seed: int
    graph_edge_count: int

    def row(self) -> list:
        return [self.size, self.trial, self.algorithm, self.penalty,
                f"{self.wall_time * 1000:.3f}", self.seed, self.graph_edge_count]


def derive_seed(master: int, *key: int) -> int:
    state = np.random.SeedSequence(master, spawn_key=key).generate_state(2, np.uint32)
    return int(state[0]) | (int(state[1]) << 32)


def _run_cell(cfg: BenchConfig, size: int, trial: int) -> list[BenchRecord]:
    graph_seed = derive_seed(cfg.seed, size, trial, _GRAPH)
    g = random_graph(size, cfg.p, graph_seed)
    out = []
    for algo in cfg.algorithms:
        if algo == "exact":
            seed = graph_seed
            t0 = time.perf_counter()
            res = solve_exact(g, cap=cfg.exact_cap)
        elif algo == "ga":
            seed = derive_seed(cfg.seed, size, trial, _GA)
            params = replace(cfg.ga_params, seed=seed)
            t0 = time.perf_counter()
            res = solve_genetic(g, params)
        else:
            seed = derive_seed(cfg.seed, size, trial, _RANDOM)
            t0 = time.perf_counter()
            res = solve_random(g, seed)
        elapsed = time.perf_counter() - t0
        out.append(BenchRecord(size, trial, algo, res.best_penalty, elapsed, seed, g.m))
    return out


def _run_cell_args(args):
    return _run_cell(*args)


def run_benchmark(cfg: BenchConfig) -> list[BenchRecord]:
    """All records, ordered by size, then trial, then the configured algorithm order.

    The ``seed`` column is the graph seed for exact rows and the solver seed
    for ga and random rows.
    """
    cells = [(cfg, size, trial) for size in cfg.sizes for trial in range(cfg.trials_per_size)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_run_cell_args, cells))
    else:
        chunks = [_run_cell(*c) for c in cells]
    return [rec for chunk in chunks for rec in chunk]


def format_records(cfg: BenchConfig, records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    for key, value in cfg.header().items():
        buf.write(f"# {key}={value}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rec.row() for rec in records)
    return buf.getvalue()


def parse_records(text: str) -> list[dict]:
    rows = [line for line in text.splitlines() if line and not line.startswith("#")]
    return list(csv.DictReader(rows))


def read_records(path) -> list[dict]:
    return parse_records(Path(path).read_text())


def summarize(rows: list[dict]) -> list[dict]:
    """Per (size, algorithm) penalty statistics, sorted by size."""
    groups: dict[tuple[int, str], list[int]] = {}
    for row in rows:
        groups.setdefault((int(row["size"]), row["algorithm"]), []).append(int(row["penalty"]))
    out = []
    for (size, algo), vals in sorted(groups.items(), key=lambda kv: (kv[0][0], ALGORITHMS.index(kv[0][1]))):
        out.append({
            "size": size,
            "algorithm": algo,
            "trials": len(vals),
            "mean_penalty": statistics.fmean(vals),
            "median_penalty": statistics.median(vals),
            "min_penalty": min(vals),
            "max_penalty": max(vals),
        })
    return out


def format_summary(summary: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SUMMARY_COLUMNS)
    for s in summary:
        writer.writerow([s["size"], s["algorithm"], s["trials"], f"{s['mean_penalty']:.3f}",
                         f"{float(s['median_penalty']):.1f}", s["min_penalty"], s["max_penalty"]])
    return buf.getvalue()


def convergence_run(g: Graph, p: GaParams) -> str:
    """CSV ``generation,best_penalty`` of one GA run."""
    res = solve_genetic(g, p)
    return format_trace(res.trace)


def format_trace(trace) -> str:
    lines = ["generation,best_penalty"] + [f"{gen},{pen}" for gen, pen in trace]
    return "\n".join(lines) + "\n"


def parse_sizes(text: str) -> tuple[int, ...]:
    """``"4..25"``, ``"10..500:50"`` (inclusive, with step) or ``"10,50,100"``."""
    sizes: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            span, _, step = part.partition(":")
            lo, hi = (int(x) for x in span.split(".."))
            sizes.extend(range(lo, hi + 1, int(step) if step else 1))
        else:
            sizes.append(int(part))
    return tuple(sizes)


_INT_KEYS = {"trials_per_size", "seed", "exact_cap", "workers"}
_GA_KEYS = {"pop_size": int, "itt_count": int, "generations": int, "mutation_rate": float}


def parse_config(text: str) -> BenchConfig:
    """Flat ``key = value`` text (``#`` comments) into a ``BenchConfig``."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    parser.read_string("[bench]\n" + text)
    raw = dict(parser["bench"])
    kwargs: dict = {}
    ga: dict = {}
    for key, value in raw.items():
        if key == "sizes":
            kwargs["sizes"] = parse_sizes(value)
        elif key == "p":
            kwargs["p"] = float(value)
        elif key == "algorithms":
            kwargs["algorithms"] = tuple(a.strip() for a in value.split(",") if a.strip())
        elif key in _INT_KEYS:
            kwargs[key] = int(value)
        elif key in _GA_KEYS:
            name = "itt_count" if key == "generations" else key
            ga[name] = _GA_KEYS[key](value)
        else:
            raise ValueError(f"unknown config key {key!r}")
    if "sizes" not in kwargs:
        raise ValueError("config must set 'sizes'")
    kwargs["ga_params"] = GaParams(**ga)
    return BenchConfig(**kwargs)
