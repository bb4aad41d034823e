"""Text and JSON formats.

Edge lists: a header line ``n m`` followed by ``m`` lines ``u v`` with
0-based vertices.  Writers emit ``u < v`` in ascending order; the reader
accepts any order but rejects loops, duplicates and bad counts.

JSON documents carry ``"format": "boxkit/1"``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Any

from boxkit.graph import Graph

FORMAT = "boxkit/1"


class FormatError(ValueError):
    pass


def _data_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}; expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, file has {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"bad edge line {ln!r}") from None
        edges.append((min(u, v), max(u, v)))
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def parse_weights(text: str) -> dict[tuple[int, int], float]:
    """Lines ``u v w`` giving the weight of the L(g) vertex pair ``{u, v}``."""
    out: dict[tuple[int, int], float] = {}
    for ln in _data_lines(text):
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad weight line {ln!r}")
        try:
            u, v, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            raise FormatError(f"bad weight line {ln!r}") from None
        if w.is_integer():
            w = int(w)
        out[(min(u, v), max(u, v))] = w
    return out


def to_dot(g: Graph, colors: list[list[tuple[int, int]]] | None = None, name: str = "G") -> str:
    """Graphviz rendering; with ``colors`` each edge lists its colour indices."""
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    member: dict[tuple[int, int], list[int]] = {}
    for i, col in enumerate(colors or []):
        for e in col:
            member.setdefault(tuple(e), []).append(i)
    for u, v in g.edges:
        attr = ""
        if colors is not None:
            attr = ' [colors="' + ",".join(map(str, member.get((u, v), []))) + '"]'
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def document(kind: str, body: Any) -> dict:
    doc = {"format": FORMAT, "kind": kind}
    if isinstance(body, dict):
        doc.update(body)
    else:
        doc["data"] = body
    return doc


def dump_json(obj: Any, fh: IO[str]) -> None:
    fh.write(json.dumps(obj, separators=(",", ":")))
    fh.write("\n")


def load_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from None


def check_format(doc: Any) -> None:
    if isinstance(doc, dict) and doc.get("format", FORMAT) != FORMAT:
        raise FormatError(f"unsupported format {doc.get('format')!r}")
