"""Graphs, colorings and the neighborhood-balance penalty.

A coloring is stored as a tuple of bits, one per vertex: 0 is Blue and 1 is
Red. The integer code of a coloring puts vertex ``j`` at bit ``j`` (least
significant bit first), so enumerating ``range(2**n)`` enumerates colorings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp


class Color(IntEnum):
    BLUE = 0
    RED = 1

    @property
    def letter(self) -> str:
        return "B" if self is Color.BLUE else "R"


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``. Duplicate
    pairs (in either orientation) collapse; self-loops and out-of-range
    endpoints raise ``ValueError``.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        self._n = int(n)
        self._edges = frozenset(norm)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(norm):
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self._adj], dtype=np.int64)

    @cached_property
    def adjacency(self) -> sp.csr_matrix:
        """Symmetric 0/1 adjacency matrix in CSR form."""
        if not self._edges:
            return sp.csr_matrix((self._n, self._n), dtype=np.int32)
        e = np.array(sorted(self._edges), dtype=np.int64)
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
        data = np.ones(len(rows), dtype=np.int32)
        return sp.csr_matrix((data, (rows, cols)), shape=(self._n, self._n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    # small named families, handy in tests and demos

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))


@dataclass(frozen=True)
class Coloring:
    """Red/blue assignment, one bit per vertex (0 = Blue, 1 = Red)."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("coloring bits must be 0 (Blue) or 1 (Red)")
        object.__setattr__(self, "bits", bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, v: int) -> Color:
        return Color(self.bits[v])

    @classmethod
    def from_code(cls, code: int, n: int) -> Coloring:
        if code < 0 or code >> n:
            raise ValueError(f"code {code} does not fit in {n} bits")
        return cls(tuple((code >> j) & 1 for j in range(n)))

    @classmethod
    def from_colors(cls, colors: Sequence[Color | int]) -> Coloring:
        return cls(tuple(int(c) for c in colors))

    @classmethod
    def from_string(cls, text: str) -> Coloring:
        """Parse ``"BRRB"`` or ``"0110"``; vertex ``j`` is character ``j``."""
        table = {"B": 0, "R": 1, "0": 0, "1": 1}
        text = text.strip()
        try:
            return cls(tuple(table[ch] for ch in text.upper()))
        except KeyError as exc:
            raise ValueError(f"invalid coloring character {exc.args[0]!r}") from None

    @classmethod
    def uniform(cls, n: int, color: Color = Color.BLUE) -> Coloring:
        return cls((int(color),) * n)

    @property
    def code(self) -> int:
        return sum(b << j for j, b in enumerate(self.bits))

    def complement(self) -> Coloring:
        return Coloring(tuple(1 - b for b in self.bits))

    def to_string(self) -> str:
        return "".join("R" if b else "B" for b in self.bits)

    def as_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)


@dataclass(frozen=True)
class PenaltyReport:
    total: int
    per_vertex: tuple[int, ...] = field(repr=False)
    red: tuple[int, ...] = field(repr=False, default=())
    blue: tuple[int, ...] = field(repr=False, default=())

    def unbalanced(self) -> list[int]:
        return [v for v, p in enumerate(self.per_vertex) if p]


def _check_length(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries but graph has {g.n} vertices")


def penalty(g: Graph, c: Coloring) -> PenaltyReport:
    """Sum over vertices of ``|red neighbors - blue neighbors|``, in O(n + m)."""
    _check_length(g, c)
    bits = c.bits
    red = []
    blue = []
    per_vertex = []
    for v in range(g.n):
        r = sum(bits[u] for u in g.neighbors(v))
        b = g.degree(v) - r
        red.append(r)
        blue.append(b)
        per_vertex.append(abs(r - b))
    return PenaltyReport(sum(per_vertex), tuple(per_vertex), tuple(red), tuple(blue))


def is_nbc(g: Graph, c: Coloring) -> bool:
    """True iff every vertex has as many red as blue neighbors."""
    return penalty(g, c).total == 0


def parity_lower_bound(g: Graph) -> int:
    """Number of odd-degree vertices; no coloring can score below this."""
    return int(np.count_nonzero(g.degrees & 1))


def batch_penalties(g: Graph, bits: np.ndarray) -> np.ndarray:
    """Penalty totals for each row of a ``(k, n)`` 0/1 array."""
    bits = np.asarray(bits)
    if bits.ndim != 2 or bits.shape[1] != g.n:
        raise ValueError(f"expected shape (k, {g.n}), got {bits.shape}")
    red = (g.adjacency @ bits.T.astype(np.int32)).T
    return np.abs(2 * red - g.degrees).sum(axis=1)
