"""Planarity testing by incremental face embedding, O(n^2).

Each biconnected block is embedded separately: start from any cycle, then
repeatedly pick a fragment (bridge) relative to the embedded subgraph and
draw one of its paths into a face whose boundary contains all of the
fragment's attachment vertices. A fragment with no admissible face proves
non-planarity; fragments with a single admissible face are placed first.
Non-planar verdicts carry an edge-minimal witness subgraph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .decompose import biconnected_components
from .graph import Graph


@dataclass(frozen=True)
class PlanarityReport:
    planar: bool
    witness_edges: tuple[tuple[int, int], ...] | None = None


def _find_cycle(g: Graph) -> list[int] | None:
    """Any simple cycle, via DFS back edge; None in a forest."""
    depth: dict[int, int] = {}
    parent: dict[int, int] = {}
    for root in g.vertices():
        if root in depth:
            continue
        depth[root] = 0
        parent[root] = -1
        stack: list[tuple[int, object]] = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            moved = False
            for u in it:
                if u not in depth:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    stack.append((u, iter(g.neighbors(u))))
                    moved = True
                    break
                elif u != parent[v] and depth[u] < depth[v]:
                    cycle = [v]
                    w = v
                    while w != u:
                        w = parent[w]
                        cycle.append(w)
                    return cycle
            if not moved:
                stack.pop()
    return None


def _fragments(g: Graph, embedded_vertices: set[int],
               embedded_edges: set[frozenset[int]]):
    """Bridges of the embedded subgraph: lone chords and outside components.

    Yields (attachments sorted, representative path finder payload) in a
    deterministic order.
    """
    frags = []
    for u, v in g.iter_edges():
        if u in embedded_vertices and v in embedded_vertices \
                and frozenset((u, v)) not in embedded_edges:
            frags.append((tuple(sorted((u, v))), None))
    outside = g.vertex_set() - embedded_vertices
    seen: set[int] = set()
    for start in sorted(outside):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        attach: set[int] = set()
        while queue:
            w = queue.popleft()
            for u in g.neighbors(w):
                if u in embedded_vertices:
                    attach.add(u)
                elif u not in seen:
                    seen.add(u)
                    comp.add(u)
                    queue.append(u)
        frags.append((tuple(sorted(attach)), comp))
    frags.sort(key=lambda f: (f[0], min(f[1]) if f[1] else -1))
    return frags


def _alpha_path(g: Graph, attach: tuple[int, ...], comp: set[int] | None) -> list[int]:
    """A path between two attachment vertices through the fragment."""
    a, b = attach[0], attach[1]
    if comp is None:
        return [a, b]
    # BFS from a through the component to b
    prev: dict[int, int] = {}
    queue = deque()
    for u in sorted(g.neighbors(a)):
        if u in comp and u not in prev:
            prev[u] = a
            queue.append(u)
    while queue:
        w = queue.popleft()
        if b in g.neighbors(w):
            path = [b, w]
            while path[-1] != a:
                path.append(prev[path[-1]])
            path.reverse()
            return path
        for u in g.neighbors(w):
            if u in comp and u not in prev:
                prev[u] = w
                queue.append(u)
    raise AssertionError("fragment attachments must be linked through it")


def _embed_block(g: Graph) -> bool:
    """DMP embedding loop for one biconnected block."""
    n, m = g.n, g.m
    if n <= 4 or m <= n + 2:
        return True
    if m > 3 * n - 6:
        return False
    cycle = _find_cycle(g)
    assert cycle is not None, "biconnected block with m > n has a cycle"
    embedded_vertices = set(cycle)
    embedded_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)]))
                      for i in range(len(cycle))}
    faces: list[list[int]] = [list(cycle), list(reversed(cycle))]

    while len(embedded_edges) < m:
        frags = _fragments(g, embedded_vertices, embedded_edges)
        chosen = None
        chosen_face = None
        for attach, comp in frags:
            admissible = [f for f in faces if set(attach) <= set(f)]
            if not admissible:
                return False
            if len(admissible) == 1:
                chosen, chosen_face = (attach, comp), admissible[0]
                break
            if chosen is None:
                chosen, chosen_face = (attach, comp), admissible[0]
        assert chosen is not None
        attach, comp = chosen
        path = _alpha_path(g, attach, comp)
        a, b = path[0], path[-1]
        face = chosen_face
        i, j = face.index(a), face.index(b)
        if i < j:
            arc_ab = face[i:j + 1]
            arc_ba = face[j:] + face[:i + 1]
        else:
            arc_ab = face[i:] + face[:j + 1]
            arc_ba = face[j:i + 1]
        interior = path[1:-1]
        faces.remove(face)
        faces.append(arc_ab + list(reversed(interior)))
        faces.append(arc_ba + interior)
        embedded_vertices.update(path)
        for s, t in zip(path, path[1:]):
            embedded_edges.add(frozenset((s, t)))
    return True


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    blocks, _ = biconnected_components(g)
    return all(_embed_block(b) for b in blocks)


def kuratowski_witness(g: Graph) -> tuple[tuple[int, int], ...]:
    """Edge-minimal non-planar subgraph of a non-planar g (one deletion pass)."""
    blocks, _ = biconnected_components(g)
    core = next(b for b in blocks if not _embed_block(b))
    h = core.copy()
    for u, v in core.edges():
        trial = h.without_edge(u, v)
        if not is_planar(trial):
            h = trial
    h.delete_vertices([v for v in h.vertices() if h.degree(v) == 0])
    return tuple(h.edges())


def planarity_test(g: Graph) -> PlanarityReport:
    """Exact planarity verdict; non-planar verdicts carry witness edges."""
    if is_planar(g):
        return PlanarityReport(planar=True)
    return PlanarityReport(planar=False, witness_edges=kuratowski_witness(g))
