"""Text, JSON and DOT formats for graphs and bipartite graphs.

Text format::

    # comment
    graph <n>            or   bigraph <nx> <ny>
    u v                       x y
    ...

Vertices are 0-based. Edges are written sorted.
"""
from __future__ import annotations

import json
from pathlib import Path

from .graph import BipartiteGraph, Graph


class FormatError(ValueError):
    pass


def _data_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((no, line.split()))
    return out


def _ints(no: int, toks: list[str], count: int) -> list[int]:
    if len(toks) != count:
        raise FormatError(f"line {no}: expected {count} integers, got {' '.join(toks)!r}")
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise FormatError(f"line {no}: not an integer in {' '.join(toks)!r}") from None


def parse_text(text: str) -> Graph | BipartiteGraph:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty input")
    no, head = lines[0]
    kind = head[0].lower()
    try:
        if kind == "graph":
            (n,) = _ints(no, head[1:], 1)
            edges = [tuple(_ints(i, t, 2)) for i, t in lines[1:]]
            for u, v in edges:
                if u == v:
                    raise FormatError(f"self-loop at {u}")
            return Graph.from_edges(n, edges)
        if kind == "bigraph":
            nx, ny = _ints(no, head[1:], 2)
            return BipartiteGraph.from_edges(nx, ny, [tuple(_ints(i, t, 2)) for i, t in lines[1:]])
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    raise FormatError(f"line {no}: expected 'graph <n>' or 'bigraph <nx> <ny>'")


def parse_json(data: dict) -> Graph | BipartiteGraph:
    try:
        if "n" in data:
            return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
        if "nx" in data:
            return BipartiteGraph.from_edges(int(data["nx"]), int(data["ny"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from None
    raise FormatError("graph JSON needs 'n' or 'nx'/'ny'")


def loads(text: str) -> Graph | BipartiteGraph:
    """Parse either format; JSON is detected by a leading '{'."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        return parse_json(data)
    return parse_text(text)


def read(path: str | Path) -> Graph | BipartiteGraph:
    return loads(Path(path).read_text())


def read_graph(path: str | Path) -> Graph:
    g = read(path)
    if not isinstance(g, Graph):
        raise FormatError(f"{path}: expected a graph, found a bipartite graph")
    return g


def read_bigraph(path: str | Path) -> BipartiteGraph:
    b = read(path)
    if not isinstance(b, BipartiteGraph):
        raise FormatError(f"{path}: expected a bipartite graph")
    return b


def to_text(obj: Graph | BipartiteGraph) -> str:
    if isinstance(obj, Graph):
        head = f"graph {obj.n}"
    else:
        head = f"bigraph {obj.nx} {obj.ny}"
    return "\n".join([head] + [f"{a} {b}" for a, b in obj.edges]) + "\n"


def to_json(obj: Graph | BipartiteGraph) -> dict:
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": [list(e) for e in obj.edges]}
    return {"nx": obj.nx, "ny": obj.ny, "edges": [list(e) for e in obj.edges]}


def to_dot(obj: Graph | BipartiteGraph) -> str:
    if isinstance(obj, Graph):
        lines = ["graph G {"]
        names = obj.labels or [str(v) for v in range(obj.n)]
        lines += [f'  {v} [label="{names[v]}"];' for v in range(obj.n)]
        lines += [f"  {u} -- {v};" for u, v in obj.edges]
    else:
        lines = ["graph B {"]
        lines += [f'  x{x} [shape=circle];' for x in range(obj.nx)]
        lines += [f'  y{y} [shape=box];' for y in range(obj.ny)]
        lines += [f"  x{x} -- y{y};" for x, y in obj.edges]
    return "\n".join(lines + ["}"]) + "\n"


def render(obj: Graph | BipartiteGraph, fmt: str = "text") -> str:
    if fmt == "text":
        return to_text(obj)
    if fmt == "json":
        return json.dumps(to_json(obj), sort_keys=True) + "\n"
    if fmt == "dot":
        return to_dot(obj)
    raise ValueError(f"unknown format {fmt!r}")
