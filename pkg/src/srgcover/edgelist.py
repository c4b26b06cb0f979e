"""Graph import/export.

Edge-list text format: a header line ``n m`` followed by ``m`` lines ``u v``
(0-based, whitespace separated). Output always uses ``u < v`` in lexicographic
order, so ``read(write(g)) == g``. The JSON form is ``{"order": n, "edges": [[u, v], ...]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import OutOfRange, ParseError, SelfLoop
from .graph import Graph, new_graph

FORMATS = ("edgelist", "json")


def _ints(line: str, lineno: int, count: int) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise ParseError(f"expected {count} integers, got {line.strip()!r}", lineno)
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(f"non-integer field in {line.strip()!r}", lineno) from None


def parse_edgelist(text: str) -> Graph:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    n, m = _ints(header, lineno, 2)
    if n < 1 or m < 0:
        raise ParseError(f"bad header {header.strip()!r}", lineno)
    body = lines[1:]
    edges = []
    for lineno, line in body:
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self loop at {u}", lineno)
        edges.append((u, v))
    if len(edges) != m:
        last = body[-1][0] if body else lines[0][0]
        raise ParseError(f"header announces {m} edges, found {len(edges)}", last)
    return new_graph(n, edges)


def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.order} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def graph_to_json(g: Graph) -> dict:
    return {"order": g.order, "edges": [list(e) for e in g.edges()]}


def graph_from_json(data: dict) -> Graph:
    try:
        return new_graph(int(data["order"]), [(int(u), int(v)) for u, v in data["edges"]])
    except (OutOfRange, SelfLoop) as exc:
        raise ParseError(str(exc)) from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from exc


def import_graph(path: str | Path) -> Graph:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno) from exc
        return graph_from_json(data)
    return parse_edgelist(text)


def export_graph(g: Graph, path: str | Path, fmt: str = "edgelist") -> None:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "json":
        text = json.dumps(graph_to_json(g)) + "\n"
    else:
        text = format_edgelist(g)
    Path(path).write_text(text)
