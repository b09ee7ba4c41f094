"""DIMACS-like edge-list files: `p edge <n> <m>`, `c` comments, `e <u> <v>` (1-based)."""

from __future__ import annotations

from typing import IO, Iterable

from .graph import Graph


class ParseError(ValueError):
    pass


def parse_graph(text: str) -> Graph:
    g = Graph()
    n_declared = None
    m_declared = None
    m_seen = 0
    seen_edges: set[tuple[int, int]] = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n_declared is not None:
                raise ParseError(f"line {ln}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {ln}: expected 'p edge <n> <m>'")
            try:
                n_declared, m_declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {ln}: non-integer counts") from None
            if n_declared < 0 or m_declared < 0:
                raise ParseError(f"line {ln}: negative counts")
            for v in range(n_declared):
                g.add_vertex(v)
        elif parts[0] == "e":
            if n_declared is None:
                raise ParseError(f"line {ln}: edge before problem line")
            if len(parts) != 3:
                raise ParseError(f"line {ln}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {ln}: non-integer endpoints") from None
            if not (1 <= u <= n_declared and 1 <= v <= n_declared):
                raise ParseError(f"line {ln}: endpoint out of range 1..{n_declared}")
            if u == v:
                raise ParseError(f"line {ln}: self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise ParseError(f"line {ln}: duplicate edge {{{u},{v}}}")
            seen_edges.add(key)
            g.add_edge(u - 1, v - 1)
            m_seen += 1
        else:
            raise ParseError(f"line {ln}: unknown record {parts[0]!r}")
    if n_declared is None:
        raise ParseError("missing problem line 'p edge <n> <m>'")
    if m_declared != m_seen:
        raise ParseError(f"problem line declares {m_declared} edges, found {m_seen}")
    return g


def read_graph(path_or_file: str | IO[str]) -> Graph:
    if hasattr(path_or_file, "read"):
        return parse_graph(path_or_file.read())
    with open(path_or_file, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize with re-compacted, 1-based vertex ids."""
    compact, _ = g.compacted()
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {compact.n} {compact.m}")
    for u, v in compact.iter_edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: str, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, comments))
