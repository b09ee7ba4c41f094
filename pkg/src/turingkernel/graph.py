"""Simple undirected graphs with stable integer vertex ids.

Vertex ids are dense non-negative integers on construction; deleting
vertices inside a working copy leaves id gaps (tombstones) so that all
downstream bookkeeping stays stable. Serialization re-compacts ids.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class GraphError(ValueError):
    pass


class Graph:
    """Finite simple undirected graph. Neighbor lists are kept sorted."""

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        self._adj: dict[int, list[int]] = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    # -- construction ------------------------------------------------------

    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise GraphError(f"vertex ids must be non-negative, got {v}")
        self._adj.setdefault(v, [])

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        self.add_vertex(u)
        self.add_vertex(v)
        if not self.has_edge(u, v):
            insort(self._adj[u], v)
            insort(self._adj[v], u)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        return cls(vertices=vertices, edges=edges)

    @classmethod
    def path_graph(cls, n: int) -> "Graph":
        return cls(vertices=range(n), edges=[(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle_graph(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("cycle needs at least 3 vertices")
        g = cls.path_graph(n)
        g.add_edge(n - 1, 0)
        return g

    @classmethod
    def complete_graph(cls, n: int) -> "Graph":
        return cls(vertices=range(n), edges=[(i, j) for i in range(n) for j in range(i + 1, n)])

    # -- queries -----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def vertex_set(self) -> set[int]:
        return set(self._adj)

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> list[int]:
        return list(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj.get(u)
        if nbrs is None:
            return False
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in sorted(self._adj):
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        return out

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        for u in sorted(self._adj):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def max_vertex(self) -> int:
        if not self._adj:
            raise GraphError("empty graph has no vertices")
        return max(self._adj)

    # -- copies and derived graphs ----------------------------------------

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {v: list(nbrs) for v, nbrs in self._adj.items()}
        return g

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep_set = set(keep)
        missing = keep_set - self._adj.keys()
        if missing:
            raise GraphError(f"vertices not in graph: {sorted(missing)}")
        g = Graph()
        g._adj = {v: [u for u in self._adj[v] if u in keep_set] for v in keep_set}
        return g

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        drop_set = set(drop)
        return self.induced(v for v in self._adj if v not in drop_set)

    def without_edge(self, u: int, v: int) -> "Graph":
        g = self.copy()
        g.delete_edge(u, v)
        return g

    # -- in-place mutation (explicit working copies only) ------------------

    def delete_vertices(self, drop: Iterable[int]) -> None:
        drop_set = set(drop)
        for v in drop_set:
            if v not in self._adj:
                raise GraphError(f"vertex {v} not in graph")
        for v in self._adj:
            if v not in drop_set:
                nbrs = self._adj[v]
                self._adj[v] = [u for u in nbrs if u not in drop_set]
        for v in drop_set:
            del self._adj[v]

    def delete_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise GraphError(f"edge {{{u},{v}}} not in graph")
        self._adj[u].remove(v)
        self._adj[v].remove(u)

    # -- connectivity -------------------------------------------------------

    def connected_components(self) -> list[list[int]]:
        """Components as sorted vertex lists, ordered by smallest vertex."""
        seen: set[int] = set()
        comps = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for u in self._adj[v]:
                    if u not in seen:
                        seen.add(u)
                        comp.append(u)
                        queue.append(u)
            comp.sort()
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def component_of(self, v: int) -> set[int]:
        seen = {v}
        queue = deque([v])
        while queue:
            w = queue.popleft()
            for u in self._adj[w]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return seen

    def is_connected_within(self, keep: set[int]) -> bool:
        """Connectivity of the induced subgraph on `keep` without copying."""
        if not keep:
            return True
        start = next(iter(keep))
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in self._adj[v]:
                if u in keep and u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == len(keep)

    # -- normalization -------------------------------------------------------

    def compacted(self) -> tuple["Graph", dict[int, int]]:
        """Relabel to dense 0-based ids; returns (graph, old id -> new id)."""
        mapping = {v: i for i, v in enumerate(self.vertices())}
        g = Graph(vertices=mapping.values(),
                  edges=[(mapping[u], mapping[v]) for u, v in self.iter_edges()])
        return g, mapping

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        raise TypeError("Graph is mutable and unhashable")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Separation:
    """Ordered vertex-set pair (A, B) covering V(G) with no A\\B to B\\A edges."""

    side_a: frozenset[int]
    side_b: frozenset[int]
    separator: frozenset[int] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "separator", self.side_a & self.side_b)

    @property
    def order(self) -> int:
        return len(self.separator)

    def verify(self, g: Graph) -> None:
        """Raise unless this is a valid separation of g."""
        if self.side_a | self.side_b != g.vertex_set():
            raise GraphError("separation sides do not cover the vertex set")
        only_a = self.side_a - self.side_b
        only_b = self.side_b - self.side_a
        for v in only_a:
            for u in g.neighbors(v):
                if u in only_b:
                    raise GraphError(f"edge {{{v},{u}}} crosses the separation")


_CLASS_KINDS = ("planar", "max-degree", "claw-free", "k3t-minor-free")


@dataclass(frozen=True)
class GraphClass:
    """Graph-class declaration used for width thresholds and validation."""

    kind: str
    t: int | None = None

    def __post_init__(self):
        if self.kind not in _CLASS_KINDS:
            raise GraphError(f"unknown graph class {self.kind!r}")
        if self.kind in ("max-degree", "k3t-minor-free"):
            if self.t is None or self.t < 3:
                raise GraphError(f"class {self.kind} needs parameter t >= 3")
        elif self.t is not None:
            raise GraphError(f"class {self.kind} takes no parameter")

    @classmethod
    def planar(cls) -> "GraphClass":
        return cls("planar")

    @classmethod
    def max_degree(cls, t: int) -> "GraphClass":
        return cls("max-degree", t)

    @classmethod
    def claw_free(cls) -> "GraphClass":
        return cls("claw-free")

    @classmethod
    def k3t_minor_free(cls, t: int) -> "GraphClass":
        return cls("k3t-minor-free", t)

    def __str__(self) -> str:
        return self.kind if self.t is None else f"{self.kind}({self.t})"


def xy_extension(g: Graph, x: int, y: int, path_len: int) -> Graph:
    """Add an xy-path: a single edge, or path_len-1 fresh degree-2 vertices."""
    if x == y:
        raise GraphError("xy-extension needs distinct endpoints")
    if not (g.has_vertex(x) and g.has_vertex(y)):
        raise GraphError("endpoints must belong to the graph")
    if path_len < 1:
        raise GraphError("path length must be at least 1")
    out = g.copy()
    if path_len == 1:
        out.add_edge(x, y)
        return out
    base = g.max_vertex() + 1
    prev = x
    for i in range(path_len - 1):
        out.add_edge(prev, base + i)
        prev = base + i
    out.add_edge(prev, y)
    return out


def is_minimal_separator(g: Graph, s: Iterable[int]) -> bool:
    """True iff s is a minimal separator of g, judged per connected component."""
    sep = set(s)
    if not sep or not all(g.has_vertex(v) for v in sep):
        return False
    for comp in g.connected_components():
        comp_set = set(comp)
        if not sep <= comp_set:
            continue
        if g.is_connected_within(comp_set - sep):
            return False
        for v in sep:
            if not g.is_connected_within(comp_set - (sep - {v})):
                return False
        return True
    return False
