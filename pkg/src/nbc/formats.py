"""Text formats: edge lists, colorings, reduction layouts and DOT.

Edge list::

    # comments and blank lines are ignored
    n m
    u v        (m lines, 0 <= u < v < n)

A coloring file holds one line of ``n`` characters from ``{B, R}`` or
``{0, 1}``; character ``j`` is vertex ``j``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .gadgets import PackLayout, ReductionLayout
from .graph import Coloring, Graph

LAYOUT_FORMAT = "nbc-layout/1"


class FormatError(ValueError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0][1].split())
    except ValueError:
        raise FormatError(f"line {lines[0][0]}: expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex") from None
        if not 0 <= u < v < n:
            raise FormatError(f"line {lineno}: need 0 <= u < v < {n}, got {u} {v}")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(rows) + "\n"


def read_graph(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(format_edge_list(g))


def parse_coloring(text: str, n: int | None = None) -> Coloring:
    lines = [line for _, line in _content_lines(text)]
    if len(lines) != 1:
        raise FormatError(f"coloring file must hold exactly one line, found {len(lines)}")
    try:
        c = Coloring.from_string(lines[0])
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if n is not None and len(c) != n:
        raise FormatError(f"coloring has {len(c)} entries, graph has {n} vertices")
    return c


def read_coloring(path, n: int | None = None) -> Coloring:
    return parse_coloring(Path(path).read_text(), n)


def write_coloring(c: Coloring, path) -> None:
    Path(path).write_text(c.to_string() + "\n")


def layout_to_dict(layout: ReductionLayout) -> dict:
    return {
        "format": LAYOUT_FORMAT,
        "items": list(layout.items),
        "k22": {"v1": layout.v1, "v2": layout.v2, "u1": layout.u1, "u2": layout.u2},
        "anchors": [layout.w1, layout.w2] if layout.anchored else None,
        "packs": [
            {
                "item": k,
                "size": p.n,
                "base": p.base,
                "supports": list(p.supports),
                "numerics": list(p.numerics),
            }
            for k, p in enumerate(layout.packs)
        ],
        "roles": layout.roles(),
    }


def layout_from_dict(data: dict) -> ReductionLayout:
    if data.get("format") != LAYOUT_FORMAT:
        raise FormatError(f"unsupported layout format {data.get('format')!r}")
    k22 = data["k22"]
    packs = tuple(
        PackLayout(p["size"], p["base"], tuple(p["supports"]), tuple(p["numerics"]))
        for p in data["packs"]
    )
    anchors = data.get("anchors") or (None, None)
    return ReductionLayout(
        tuple(data["items"]), k22["v1"], k22["v2"], k22["u1"], k22["u2"], packs, *anchors
    )


def write_layout(layout: ReductionLayout, path) -> None:
    Path(path).write_text(json.dumps(layout_to_dict(layout), indent=1) + "\n")


def read_layout(path) -> ReductionLayout:
    try:
        return layout_from_dict(json.loads(Path(path).read_text()))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise FormatError(f"malformed layout file: {exc}") from None


def to_dot(g: Graph, coloring: Coloring | None = None, layout: ReductionLayout | None = None) -> str:
    """Undirected DOT source; numeric vertices are drawn as boxes."""
    roles = layout.roles() if layout is not None else None
    out = ["graph G {", "  node [style=filled, fillcolor=white];"]
    for v in range(g.n):
        attrs = []
        if coloring is not None:
            attrs.append(f'fillcolor="{"red" if coloring.bits[v] else "lightblue"}"')
        if roles is not None:
            role = roles[v]["role"]
            if role == "numeric":
                attrs.append("shape=box")
            elif role in ("v1", "v2", "u1", "u2", "w1", "w2"):
                attrs.append(f'xlabel="{role}"')
            else:
                attrs.append("shape=circle")
        out.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    out.extend(f"  {u} -- {v};" for u, v in g.sorted_edges())
    out.append("}")
    return "\n".join(out) + "\n"
