"""Packs and the PARTITION -> NBC graph construction.

An ``n``-pack (``n > 1``) has a base vertex joined to ``2n`` supports, and
``n`` numeric vertices where numeric ``i`` is joined to supports ``2i`` and
``2i + 1``. A 1-pack is a lone numeric vertex.

The reduced graph for a multiset ``S`` starts from ``K_{2,2}`` with parts
``{v1, v2}`` and ``{u1, u2}``, adds one ``a``-pack per item ``a``, and joins
``v1`` and ``v2`` to every numeric vertex. Vertices are numbered
``v1, v2, u1, u2`` first, then each pack in item order as base, supports,
numerics.

The bottom vertices ``u1`` and ``u2`` are adjacent only to ``v1`` and ``v2``,
so nothing forces them to differ. When they share a color, ``v1`` balances
against numerics whose item sums differ by exactly 2, and the graph can
admit an NBC although no equal-sum split exists (``S = {1, 3}`` is the
smallest case). ``reduce_partition(..., anchored=True)`` appends two extra
vertices ``w1, w2``, each joined to ``u1`` and ``u2``; a balanced ``w1``
then forces ``u1`` and ``u2`` apart and the equivalence holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Color, Coloring, Graph, is_nbc


class ReductionError(ValueError):
    """Invalid partition instance, split, or coloring for a reduced graph."""


class UnequalSplitError(ReductionError):
    """A balanced coloring whose numerics encode sums that differ by 2.

    Happens exactly when ``u1`` and ``u2`` share a color in the
    unanchored construction.
    """


class PackInvariantError(AssertionError):
    """A numeric vertex disagrees with its pack in a balanced coloring.

    Cannot happen for a genuine NBC; raised as a defect signal.
    """


@dataclass(frozen=True)
class PartitionInstance:
    items: tuple[int, ...]

    def __post_init__(self):
        items = tuple(int(a) for a in self.items)
        if not items:
            raise ReductionError("partition instance must be nonempty")
        bad = [a for a in items if a < 1]
        if bad:
            raise ReductionError(f"items must be positive integers, got {bad}")
        object.__setattr__(self, "items", items)

    @classmethod
    def parse(cls, text: str) -> PartitionInstance:
        """Read a comma-separated list such as ``"1,4,3"``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            if isinstance(exc, ReductionError):
                raise
            raise ReductionError(f"cannot parse items {text!r}: {exc}") from None

    @property
    def total(self) -> int:
        return sum(self.items)

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class PackLayout:
    n: int
    base: int | None
    supports: tuple[int, ...]
    numerics: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        head = () if self.base is None else (self.base,)
        return head + self.supports + self.numerics

    def support_pair(self, i: int) -> tuple[int, int]:
        return self.supports[2 * i], self.supports[2 * i + 1]


@dataclass(frozen=True)
class ReductionLayout:
    items: tuple[int, ...]
    v1: int
    v2: int
    u1: int
    u2: int
    packs: tuple[PackLayout, ...]
    w1: int | None = None
    w2: int | None = None

    @property
    def anchored(self) -> bool:
        return self.w1 is not None

    @property
    def n_vertices(self) -> int:
        return 4 + sum(len(p.vertices) for p in self.packs) + 2 * self.anchored

    def roles(self) -> list[dict]:
        """One role record per vertex, indexed by vertex."""
        out: list[dict] = [{} for _ in range(self.n_vertices)]
        names = ("v1", "v2", "u1", "u2") + (("w1", "w2") if self.anchored else ())
        for name in names:
            out[getattr(self, name)] = {"role": name}
        for k, pack in enumerate(self.packs):
            if pack.base is not None:
                out[pack.base] = {"role": "base", "pack": k}
            for i, s in enumerate(pack.supports):
                out[s] = {"role": "support", "pack": k, "index": i}
            for i, x in enumerate(pack.numerics):
                out[x] = {"role": "numeric", "pack": k, "index": i}
        return out


def _pack_edges(layout: PackLayout) -> list[tuple[int, int]]:
    edges = []
    for i, x in enumerate(layout.numerics):
        if layout.base is None:
            break
        for s in layout.support_pair(i):
            edges.append((layout.base, s))
            edges.append((s, x))
    return edges


def _pack_layout(n: int, offset: int = 0) -> PackLayout:
    if n < 1:
        raise ReductionError(f"pack size must be positive, got {n}")
    if n == 1:
        return PackLayout(1, None, (), (offset,))
    return PackLayout(
        n,
        offset,
        tuple(range(offset + 1, offset + 1 + 2 * n)),
        tuple(range(offset + 1 + 2 * n, offset + 1 + 3 * n)),
    )


def build_npack(n: int) -> tuple[Graph, PackLayout]:
    """Standalone ``n``-pack: ``3n + 1`` vertices and ``4n`` edges for ``n > 1``."""
    layout = _pack_layout(n)
    return Graph(len(layout.vertices), _pack_edges(layout)), layout


def pack_coloring(layout: PackLayout, base: Color = Color.BLUE) -> dict[int, int]:
    """Balanced coloring of one pack, as a vertex -> bit map.

    Numerics take the color opposite ``base``. Support ``2i`` is Blue and
    ``2i + 1`` is Red, so each numeric sees one support of each color and
    the base sees ``n`` of each.
    """
    numeric = 1 - int(base)
    colors = {x: numeric for x in layout.numerics}
    if layout.base is not None:
        colors[layout.base] = int(base)
        for j, s in enumerate(layout.supports):
            colors[s] = j % 2
    return colors


def canonical_npack_coloring(layout: PackLayout) -> Coloring:
    colors = pack_coloring(layout, Color.BLUE)
    return Coloring(tuple(colors[v] for v in range(len(layout.vertices))))


def reduce_partition(
    s: PartitionInstance | Iterable[int], anchored: bool = False
) -> tuple[Graph, ReductionLayout]:
    """Build the NBC instance for a PARTITION instance.

    Any equal-sum split of ``s`` yields an NBC. The converse needs
    ``anchored=True`` (see the module docstring).
    """
    if not isinstance(s, PartitionInstance):
        s = PartitionInstance(tuple(s))
    v1, v2, u1, u2 = 0, 1, 2, 3
    edges = [(v1, u1), (v1, u2), (v2, u1), (v2, u2)]
    packs = []
    offset = 4
    for a in s.items:
        pack = _pack_layout(a, offset)
        packs.append(pack)
        edges.extend(_pack_edges(pack))
        for x in pack.numerics:
            edges.append((v1, x))
            edges.append((v2, x))
        offset += len(pack.vertices)
    w1 = w2 = None
    if anchored:
        w1, w2 = offset, offset + 1
        edges += [(u1, w1), (u2, w1), (u1, w2), (u2, w2)]
        offset += 2
    layout = ReductionLayout(s.items, v1, v2, u1, u2, tuple(packs), w1, w2)
    return Graph(offset, edges), layout


def _check_split(layout: ReductionLayout, split) -> tuple[frozenset[int], frozenset[int]]:
    s1, s2 = (frozenset(int(i) for i in part) for part in split)
    k = len(layout.items)
    if s1 & s2:
        raise ReductionError(f"split parts overlap on items {sorted(s1 & s2)}")
    if s1 | s2 != frozenset(range(k)):
        raise ReductionError(f"split must cover item indices 0..{k - 1} exactly")
    sum1 = sum(layout.items[i] for i in s1)
    sum2 = sum(layout.items[i] for i in s2)
    if sum1 != sum2:
        raise ReductionError(f"unequal sums: {sum1} != {sum2}")
    return s1, s2


def coloring_from_partition(
    layout: ReductionLayout, split: tuple[Iterable[int], Iterable[int]]
) -> Coloring:
    """NBC of the reduced graph from an equal-sum split of item indices.

    Packs in the first part get a Blue base and Red numerics; packs in the
    second part the reverse. ``v1`` is Blue, ``v2`` Red, ``u1`` Red, ``u2``
    Blue, and in the anchored form ``w1`` Blue, ``w2`` Red.
    """
    s1, _ = _check_split(layout, split)
    bits = [0] * layout.n_vertices
    bits[layout.v1] = 0
    bits[layout.v2] = 1
    bits[layout.u1] = 1
    bits[layout.u2] = 0
    if layout.anchored:
        bits[layout.w1] = 0
        bits[layout.w2] = 1
    for k, pack in enumerate(layout.packs):
        base = Color.BLUE if k in s1 else Color.RED
        for v, b in pack_coloring(pack, base).items():
            bits[v] = b
    return Coloring(tuple(bits))


def pack_violations(layout: ReductionLayout, c: Coloring) -> list[int]:
    """Indices of ``n > 1`` packs whose numerics are mixed or match the base."""
    bad = []
    for k, pack in enumerate(layout.packs):
        if pack.base is None:
            continue
        numeric = {c.bits[x] for x in pack.numerics}
        if len(numeric) != 1 or numeric == {c.bits[pack.base]}:
            bad.append(k)
    return bad


def partition_from_coloring(
    layout: ReductionLayout, c: Coloring, graph: Graph | None = None
) -> tuple[frozenset[int], frozenset[int]]:
    """Recover the equal-sum split encoded by an NBC of the reduced graph.

    Items whose numerics are Red go to the first part, Blue to the second.
    Raises ``UnequalSplitError`` for the balanced colorings of the
    unanchored graph in which ``u1`` and ``u2`` agree.
    """
    if graph is None:
        graph, _ = reduce_partition(layout.items, anchored=layout.anchored)
    if len(c) != graph.n:
        raise ReductionError(f"coloring has {len(c)} entries, graph has {graph.n}")
    if not is_nbc(graph, c):
        raise ReductionError("coloring is not a neighborhood balanced coloring")
    red, blue = set(), set()
    for k, pack in enumerate(layout.packs):
        colors = {c.bits[x] for x in pack.numerics}
        if len(colors) != 1:
            raise PackInvariantError(f"pack {k} has numerics of both colors")
        (red if colors.pop() else blue).add(k)
    s1, s2 = frozenset(red), frozenset(blue)
    sum1 = sum(layout.items[i] for i in s1)
    sum2 = sum(layout.items[i] for i in s2)
    if sum1 != sum2:
        raise UnequalSplitError(
            f"balanced coloring encodes sums {sum1} and {sum2}; u1 and u2 share a color"
        )
    return s1, s2


def split_values(items: Sequence[int], split) -> tuple[list[int], list[int]]:
    """Item values of an index split, for display."""
    return [items[i] for i in sorted(split[0])], [items[i] for i in sorted(split[1])]
