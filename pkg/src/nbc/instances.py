"""Seeded random graph instances."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

UNIFORM = "uniform"
EVEN_DEGREE = "even-degree"


@dataclass(frozen=True)
class GenSpec:
    n: int
    p: float = 0.5
    seed: int = 0
    mode: str = UNIFORM

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.mode not in (UNIFORM, EVEN_DEGREE):
            raise ValueError(f"unknown mode {self.mode!r}")


def random_graph(n: int, p: float = 0.5, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p): every vertex pair is an edge with probability ``p``."""
    GenSpec(n, p, seed)
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_even_graph(n: int, p: float = 0.5, seed: int = 0, max_cycles: int | None = None) -> Graph:
    """Graph with all degrees even, built by XOR-ing random cycles.

    Each cycle runs through a random subset of at least three vertices in
    random order. Cycles are added until the edge count reaches
    ``p * n * (n - 1) / 2`` or ``max_cycles`` (default ``4 * n``) is hit.
    Shared edges cancel, which keeps the graph simple and every degree even.
    """
    GenSpec(n, p, seed, EVEN_DEGREE)
    if n < 3:
        raise ValueError(f"even-degree graphs need n >= 3, got {n}")
    if p == 0:
        return Graph(n)
    if max_cycles is None:
        max_cycles = 4 * n
    rng = np.random.default_rng(seed)
    target = p * n * (n - 1) / 2
    edges: set[tuple[int, int]] = set()
    for _ in range(max_cycles):
        length = int(rng.integers(3, n + 1))
        walk = rng.permutation(n)[:length].tolist()
        for a, b in zip(walk, walk[1:] + walk[:1]):
            edges ^= {(min(a, b), max(a, b))}
        if len(edges) >= target:
            break
    return Graph(n, edges)


def generate(spec: GenSpec) -> Graph:
    if spec.mode == EVEN_DEGREE:
        return random_even_graph(spec.n, spec.p, spec.seed)
    return random_graph(spec.n, spec.p, spec.seed)
