"""Exact, genetic and random NBC solvers, plus a brute-force PARTITION oracle.

All stochastic routines draw from ``numpy.random.Generator(PCG64(seed))``.
Ties between colorings of equal penalty are broken by the lowest integer
code (vertex ``j`` at bit ``j``).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gadgets import PartitionInstance
from .graph import Coloring, Graph, batch_penalties, penalty

DEFAULT_EXACT_CAP = 30
ORACLE_MAX_ITEMS = 25

# low-bit table width for the exact solver
_LO_BITS = 16


class TooLargeError(ValueError):
    """Instance exceeds the size bound of an exponential routine."""


@dataclass(frozen=True)
class SolveResult:
    best: Coloring
    best_penalty: int
    evaluations: int
    trace: tuple[tuple[int, int], ...] | None = None
    seed: int | None = None
    algorithm: str = ""

    def summary(self) -> str:
        return f"penalty={self.best_penalty} evaluations={self.evaluations}"


@dataclass(frozen=True)
class GaParams:
    itt_count: int = 500
    pop_size: int = 100
    mutation_rate: float = 0.02
    seed: int = 0

    def __post_init__(self):
        if self.itt_count < 1:
            raise ValueError(f"itt_count must be >= 1, got {self.itt_count}")
        if self.pop_size < 2 or self.pop_size % 2:
            raise ValueError(f"pop_size must be even and >= 2, got {self.pop_size}")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError(f"mutation_rate must lie in [0, 1], got {self.mutation_rate}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed)))


# ---------------------------------------------------------------- exact


def _bit_table(n_bits: int, first: int, n: int, adj_rows: np.ndarray) -> np.ndarray:
    """Red-neighbor counts contributed by every assignment of ``n_bits`` vertices.

    Row ``k`` is the count vector (length ``n``) when vertices
    ``first .. first + n_bits - 1`` take the bits of ``k``.
    """
    codes = np.arange(1 << n_bits, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(n_bits)) & 1).astype(np.int32)
    return bits @ adj_rows[first : first + n_bits]


def _scan_block(base_lo: np.ndarray, hi_table: np.ndarray, lo_codes: np.ndarray,
                lo_bits: int, hi_start: int, hi_stop: int):
    """Minimum penalty over hi codes ``hi_start..hi_stop-1``.

    Returns ``(penalty, lowest_code, highest_code, evaluations)`` where the
    codes are the extreme optimal codes in the block.
    """
    best = None
    lo_first = hi_first = lo_last = hi_last = 0
    for h in range(hi_start, hi_stop):
        tot = np.abs(base_lo + hi_table[h]).sum(axis=1, dtype=np.int64)
        m = int(tot.min())
        if best is None or m < best:
            best = m
            hits = np.flatnonzero(tot == m)
            lo_first, hi_first = int(hits[0]), h
            lo_last, hi_last = int(hits[-1]), h
        elif m == best:
            lo_last, hi_last = int(np.flatnonzero(tot == m)[-1]), h
    first = (hi_first << lo_bits) | int(lo_codes[lo_first])
    last = (hi_last << lo_bits) | int(lo_codes[lo_last])
    return best, first, last, (hi_stop - hi_start) * len(lo_codes)


def solve_exact(g: Graph, cap: int = DEFAULT_EXACT_CAP, workers: int = 1) -> SolveResult:
    """Global minimum of the penalty by exhaustive enumeration.

    Vertex 0 is pinned to Blue, halving the search; the optimal set is
    closed under complement so the lowest optimal code overall is the
    smaller of the lowest pinned optimum and the complement of the highest
    pinned optimum. The enumeration splits into blocks over the high bits;
    ``workers`` threads scan blocks and the reduction keeps the global
    tie-break, so the result does not depend on ``workers``.
    """
    n = g.n
    if n > cap:
        raise TooLargeError(f"exact search over 2^{n} colorings exceeds cap of {cap} vertices")
    adj = g.adjacency.toarray().astype(np.int32)
    deg = g.degrees.astype(np.int32)
    lo_bits = min(n, _LO_BITS)
    hi_bits = n - lo_bits

    lo_codes = np.arange(0, 1 << lo_bits, 2, dtype=np.int64)  # vertex 0 Blue
    lo_red = _bit_table(lo_bits, 0, n, adj)[lo_codes]
    # |r - b| = |2r - deg|; fold the hi-part red counts in per block
    base_lo = (2 * lo_red - deg).astype(np.int16)
    hi_table = (2 * _bit_table(hi_bits, lo_bits, n, adj)).astype(base_lo.dtype)

    n_hi = 1 << hi_bits
    workers = max(1, min(int(workers), n_hi))
    bounds = np.linspace(0, n_hi, workers + 1).astype(int)
    jobs = [(base_lo, hi_table, lo_codes, lo_bits, int(a), int(b))
            for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    if workers == 1:
        parts = [_scan_block(*job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _scan_block(*job), jobs))

    best = min(p[0] for p in parts)
    first = min(p[1] for p in parts if p[0] == best)
    last = max(p[2] for p in parts if p[0] == best)
    mask = (1 << n) - 1
    code = min(first, last ^ mask)
    evaluations = sum(p[3] for p in parts)
    return SolveResult(Coloring.from_code(code, n), int(best), evaluations, algorithm="exact")


def exhaustive_minimum(g: Graph) -> int:
    """Plain enumeration of every coloring, highest code first.

    Shares no code with ``solve_exact``: codes are walked downward and each
    vertex balance is recounted from the edge list. Cross-check for small
    graphs only.
    """
    n = g.n
    edges = g.sorted_edges()
    best = None
    for code in range((1 << n) - 1, -1, -1):
        balance = [0] * n
        for u, v in edges:
            balance[u] += 1 if (code >> v) & 1 else -1
            balance[v] += 1 if (code >> u) & 1 else -1
        total = sum(abs(x) for x in balance)
        if best is None or total < best:
            best = total
    return best


# ---------------------------------------------------------------- genetic


def _rank(pop: np.ndarray, pen: np.ndarray) -> np.ndarray:
    """Order members by penalty, then by integer code (high bit most significant)."""
    return np.lexsort(np.vstack([pop.T, pen[None, :]]))


def solve_genetic(g: Graph, p: GaParams) -> SolveResult:
    """Single-point-crossover GA with elitist survival of the better half.

    Each generation: score the population, keep the best ``pop_size / 2``,
    breed ``pop_size / 2`` children from uniformly drawn parent pairs, then
    flip every bit of every member with probability ``mutation_rate``.
    Stops early once some member scores 0. Reports the best member seen in
    any generation together with a per-generation trace.

    One generation costs O(pop_size * (n + m)).
    """
    n = g.n
    half = p.pop_size // 2
    rng = make_rng(p.seed)
    pop = rng.integers(0, 2, size=(p.pop_size, n), dtype=np.uint8)
    idx = np.arange(n)

    best_bits = None
    best_pen = None
    trace = []
    evaluations = 0
    for gen in range(1, p.itt_count + 1):
        pen = batch_penalties(g, pop)
        evaluations += p.pop_size
        order = _rank(pop, pen)
        lead = order[0]
        if best_pen is None or pen[lead] < best_pen:
            best_pen = int(pen[lead])
            best_bits = pop[lead].copy()
        trace.append((gen, best_pen))
        if best_pen == 0 or gen == p.itt_count:
            break

        survivors = pop[order[:half]]
        parents = rng.integers(0, p.pop_size, size=(half, 2))
        if n > 1:
            cut = rng.integers(1, n, size=half)
            take_a = idx[None, :] < cut[:, None]
        else:
            take_a = np.ones((half, n), dtype=bool)
        children = np.where(take_a, pop[parents[:, 0]], pop[parents[:, 1]])
        pop = np.concatenate([survivors, children])
        pop ^= (rng.random(pop.shape) < p.mutation_rate).astype(np.uint8)

    return SolveResult(
        Coloring(tuple(int(b) for b in best_bits)),
        best_pen,
        evaluations,
        trace=tuple(trace),
        seed=p.seed,
        algorithm="ga",
    )


# ---------------------------------------------------------------- random


def solve_random(g: Graph, seed: int) -> SolveResult:
    """One uniformly random coloring and its penalty."""
    rng = make_rng(seed)
    bits = rng.integers(0, 2, size=g.n, dtype=np.uint8)
    c = Coloring(tuple(int(b) for b in bits))
    return SolveResult(c, penalty(g, c).total, 1, seed=int(seed), algorithm="random")


# ---------------------------------------------------------------- partition


def partition_oracle(s: PartitionInstance | list[int] | tuple[int, ...]):
    """Brute-force equal-sum split of item indices, or ``None``.

    Subsets containing item 0 are scanned in increasing bitmask order; the
    first with half the total becomes the second part, the remaining items
    the first part.
    """
    if not isinstance(s, PartitionInstance):
        s = PartitionInstance(tuple(s))
    k = len(s.items)
    if k > ORACLE_MAX_ITEMS:
        raise TooLargeError(f"{k} items exceeds the brute-force bound of {ORACLE_MAX_ITEMS}")
    total = s.total
    if total % 2:
        return None
    target = total // 2
    items = np.array(s.items, dtype=np.int64)

    lo_bits = min(k, 14)
    lo_masks = np.arange(1 << lo_bits, dtype=np.int64)
    lo_bitmat = (lo_masks[:, None] >> np.arange(lo_bits)) & 1
    lo_sums = lo_bitmat @ items[:lo_bits]
    with_first = lo_masks & 1 == 1
    hi_items = items[lo_bits:]
    for hi in range(1 << (k - lo_bits)):
        hi_sum = sum(int(a) for j, a in enumerate(hi_items) if (hi >> j) & 1)
        hits = np.flatnonzero(with_first & (lo_sums + hi_sum == target))
        if len(hits):
            mask = (hi << lo_bits) | int(hits[0])
            second = frozenset(j for j in range(k) if (mask >> j) & 1)
            return frozenset(range(k)) - second, second
    return None
