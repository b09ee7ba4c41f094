"""Biconnected components, adhesion-2 tree decompositions, and torso graphs.

The adhesion-2 decomposition with triconnected torsos is built by a direct
recursion on connectivity: triconnected graphs are a single bag, otherwise
split at a connected component boundary, a cut vertex, or a separation pair
(with a virtual edge added to each piece). All tie-breaking is by smallest
vertex / node id so the output is deterministic.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, GraphError, Separation


# ---------------------------------------------------------------------------
# biconnected components
# ---------------------------------------------------------------------------

def biconnected_components(g: Graph) -> tuple[list[Graph], list[int]]:
    """Edge partition into biconnected subgraphs plus the cut vertices.

    Components are ordered by their lexicographically smallest edge.
    Isolated vertices belong to no component.
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    comps_edges: list[list[tuple[int, int]]] = []
    counter = 0
    edge_stack: list[tuple[int, int]] = []

    for root in g.vertices():
        if root in index:
            continue
        # iterative DFS with lowpoints
        stack: list[tuple[int, int | None, Iterable[int]]] = []
        index[root] = low[root] = counter
        counter += 1
        stack.append((root, None, iter(g.neighbors(root))))
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    # skip the tree edge back to the parent exactly once
                    parent = None
                    stack[-1] = (v, None, it)
                    continue
                if u not in index:
                    index[u] = low[u] = counter
                    counter += 1
                    edge_stack.append((v, u))
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                elif index[u] < index[v]:
                    edge_stack.append((v, u))
                    if index[u] < low[v]:
                        low[v] = index[u]
                        stack[-1] = (v, parent, it)
            if advanced:
                continue
            stack.pop()
            if stack:
                w, wparent, wit = stack[-1]
                if low[v] < low[w]:
                    low[w] = low[v]
                    stack[-1] = (w, wparent, wit)
                if low[v] >= index[w]:
                    comp = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == (w, v):
                            break
                    comps_edges.append(comp)

    def norm(e: tuple[int, int]) -> tuple[int, int]:
        return (min(e), max(e))

    graphs = []
    membership: dict[int, int] = {}
    for comp in comps_edges:
        edges = sorted(norm(e) for e in comp)
        cg = Graph(edges=edges)
        graphs.append(cg)
        for v in cg.vertices():
            membership[v] = membership.get(v, 0) + 1
    graphs.sort(key=lambda cg: cg.edges()[0])
    cut_vertices = sorted(v for v, cnt in membership.items() if cnt > 1)
    return graphs, cut_vertices


def cut_vertices(g: Graph) -> list[int]:
    return biconnected_components(g)[1]


def smallest_cut_vertex(g: Graph) -> int | None:
    cvs = cut_vertices(g)
    return cvs[0] if cvs else None


def smallest_separation_pair(g: Graph) -> tuple[int, int] | None:
    """Lexicographically smallest {a,b} with g - {a,b} disconnected.

    Scans vertices in increasing order; {a,b} separates iff b is a cut
    vertex of g - a, so one articulation pass per candidate a suffices.
    Intended for connected graphs without cut vertices.
    """
    verts = g.vertices()
    if len(verts) < 4:
        return None
    for a in verts:
        rest = g.without_vertices([a])
        if not rest.is_connected():
            # a is itself a cut vertex; caller handles that case first
            continue
        cvs = cut_vertices(rest)
        partners = [b for b in cvs if b > a]
        if partners:
            return (a, min(partners))
        # pairs (b, a) with b < a were ruled out at earlier iterations
    return None


def is_triconnected(g: Graph) -> bool:
    """No vertex set of size < 3 disconnects g (single vertices count as connected)."""
    if g.n <= 1:
        return True
    if not g.is_connected():
        return False
    if cut_vertices(g):
        return False
    return smallest_separation_pair(g) is None


# ---------------------------------------------------------------------------
# tree decompositions
# ---------------------------------------------------------------------------

@dataclass
class TreeDec:
    """Rooted-optional tree decomposition with explicit bags."""

    bags: dict[int, set[int]]
    tree_edges: set[frozenset[int]]
    root: int | None = None

    def nodes(self) -> list[int]:
        return sorted(self.bags)

    def bag(self, i: int) -> set[int]:
        return self.bags[i]

    def node_neighbors(self, i: int) -> list[int]:
        out = []
        for e in self.tree_edges:
            if i in e:
                (j,) = e - {i}
                out.append(j)
        return sorted(out)

    def adhesion(self) -> int:
        if not self.tree_edges:
            return 0
        return max(len(self.bags[i] & self.bags[j]) for i, j in map(sorted, self.tree_edges))

    def edge_adhesion(self, i: int, j: int) -> set[int]:
        if frozenset((i, j)) not in self.tree_edges:
            raise GraphError(f"no tree edge {{{i},{j}}}")
        return self.bags[i] & self.bags[j]

    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def copy(self) -> "TreeDec":
        return TreeDec(bags={i: set(b) for i, b in self.bags.items()},
                       tree_edges=set(self.tree_edges),
                       root=self.root)

    # -- tree structure ----------------------------------------------------

    def subtree_nodes(self, i: int, avoiding: int) -> list[int]:
        """Nodes of the component of T - {avoiding} that contains i."""
        seen = {i, avoiding}
        queue = deque([i])
        out = [i]
        while queue:
            v = queue.popleft()
            for u in self.node_neighbors(v):
                if u not in seen:
                    seen.add(u)
                    out.append(u)
                    queue.append(u)
        return sorted(out)

    def bag_union(self, nodes: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for i in nodes:
            out |= self.bags[i]
        return out

    def parent_of(self, i: int) -> int | None:
        if self.root is None:
            raise GraphError("decomposition is not rooted")
        if i == self.root:
            return None
        prev: dict[int, int] = {self.root: self.root}
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            if v == i:
                return prev[v]
            for u in self.node_neighbors(v):
                if u not in prev:
                    prev[u] = v
                    queue.append(u)
        raise GraphError(f"node {i} not in tree")

    def children_of(self, i: int) -> list[int]:
        p = self.parent_of(i)
        return [j for j in self.node_neighbors(i) if j != p]

    def validate(self, g: Graph) -> None:
        """Check the three tree-decomposition conditions and tree-ness."""
        nodes = set(self.bags)
        if not nodes:
            raise GraphError("decomposition has no nodes")
        for e in self.tree_edges:
            if not e <= nodes:
                raise GraphError(f"tree edge {set(e)} uses unknown node")
        if len(self.tree_edges) != len(nodes) - 1:
            raise GraphError("tree edge count is not |nodes| - 1")
        seen = {min(nodes)}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for u in self.node_neighbors(v):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        if seen != nodes:
            raise GraphError("decomposition tree is not connected")
        covered = self.bag_union(nodes)
        if covered != g.vertex_set():
            raise GraphError("bags do not cover the vertex set")
        for u, v in g.iter_edges():
            if not any(u in b and v in b for b in self.bags.values()):
                raise GraphError(f"edge {{{u},{v}}} not inside any bag")
        for v in g.vertices():
            holding = {i for i, b in self.bags.items() if v in b}
            start = min(holding)
            seen_v = {start}
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for j in self.node_neighbors(i):
                    if j in holding and j not in seen_v:
                        seen_v.add(j)
                        queue.append(j)
            if seen_v != holding:
                raise GraphError(f"nodes holding vertex {v} are not a subtree")


def torso(g: Graph, bag: Iterable[int]) -> Graph:
    """Induced subgraph on the bag plus shortcut edges for externally
    connected bag pairs (paths with all interior vertices outside the bag)."""
    bag_set = set(bag)
    out = g.induced(bag_set)
    outside = g.vertex_set() - bag_set
    seen: set[int] = set()
    for start in sorted(outside):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        attach: set[int] = set()
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u in bag_set:
                    attach.add(u)
                elif u not in seen:
                    seen.add(u)
                    comp.add(u)
                    queue.append(u)
        attach_sorted = sorted(attach)
        for i, u in enumerate(attach_sorted):
            for v in attach_sorted[i + 1:]:
                if not out.has_edge(u, v):
                    out.add_edge(u, v)
    return out


def separation_from_tree_edge(td: TreeDec, edge: tuple[int, int], g: Graph | None = None) -> Separation:
    i, j = edge
    if frozenset((i, j)) not in td.tree_edges:
        raise GraphError(f"{{{i},{j}}} is not a tree edge")
    side_i = td.bag_union(td.subtree_nodes(i, avoiding=j))
    side_j = td.bag_union(td.subtree_nodes(j, avoiding=i))
    return Separation(frozenset(side_i), frozenset(side_j))


def separation_from_children(td: TreeDec, i: int, js: list[int], g: Graph) -> Separation:
    """Separation grouping the subtrees that hang at children js of node i.

    All js must be neighbors of i with one common adhesion to i.
    """
    if not js:
        raise GraphError("need at least one child")
    adhesions = {frozenset(td.bags[i] & td.bags[j]) for j in js}
    if len(adhesions) != 1:
        raise GraphError("children have differing adhesions")
    (sep,) = adhesions
    side_a: set[int] = set()
    for j in js:
        if frozenset((i, j)) not in td.tree_edges:
            raise GraphError(f"{j} is not a neighbor of {i}")
        side_a |= td.bag_union(td.subtree_nodes(j, avoiding=i))
    side_b = (g.vertex_set() - side_a) | set(sep)
    return Separation(frozenset(side_a), frozenset(side_b))


# ---------------------------------------------------------------------------
# the adhesion-2 decomposition with triconnected torsos
# ---------------------------------------------------------------------------

@dataclass
class TutteDec:
    """Adhesion-2 tree decomposition whose torsos are triconnected."""

    base: TreeDec
    graph: Graph
    _torsos: dict[int, Graph] = field(default_factory=dict, repr=False)

    def torso_of(self, i: int) -> Graph:
        if i not in self._torsos:
            self._torsos[i] = torso(self.graph, self.base.bags[i])
        return self._torsos[i]

    def width(self) -> int:
        return self.base.width()

    def max_bag_size(self) -> int:
        return max((len(b) for b in self.base.bags.values()), default=0)


def tutte_decompose(g: Graph) -> TutteDec:
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g.n + 1000))

    def build(h: Graph) -> tuple[dict[int, set[int]], set[frozenset[int]], int]:
        """Returns (bags, tree edges, smallest node id) for graph h."""
        comps = h.connected_components()
        if len(comps) > 1:
            parts = [build(h.induced(c)) for c in comps]
            bags: dict[int, set[int]] = {}
            edges: set[frozenset[int]] = set()
            for b, e, _ in parts:
                bags.update(b)
                edges |= e
            anchor = parts[0][2]
            for _, _, root in parts[1:]:
                edges.add(frozenset((anchor, root)))
            return bags, edges, min(bags)

        cv = smallest_cut_vertex(h)
        if cv is not None:
            pieces = h.without_vertices([cv]).connected_components()
            parts = []
            for comp in pieces:
                parts.append(build(h.induced(set(comp) | {cv})))
            bags, edges = {}, set()
            link_nodes = []
            for b, e, _ in parts:
                bags.update(b)
                edges |= e
                link_nodes.append(min(i for i, bag in b.items() if cv in bag))
            for other in link_nodes[1:]:
                edges.add(frozenset((link_nodes[0], other)))
            return bags, edges, min(bags)

        pair = smallest_separation_pair(h)
        if pair is not None:
            u, v = pair
            pieces = h.without_vertices([u, v]).connected_components()
            parts = []
            for comp in pieces:
                piece = h.induced(set(comp) | {u, v})
                piece.add_edge(u, v)  # virtual edge, confined to this copy
                parts.append(build(piece))
            bags, edges = {}, set()
            link_nodes = []
            for b, e, _ in parts:
                bags.update(b)
                edges |= e
                link_nodes.append(min(i for i, bag in b.items() if u in bag and v in bag))
            for other in link_nodes[1:]:
                edges.add(frozenset((link_nodes[0], other)))
            return bags, edges, min(bags)

        # triconnected base case
        node = fresh()
        return {node: h.vertex_set()}, set(), node

    bags, edges, _ = build(g)
    td = TreeDec(bags=bags, tree_edges=edges)
    return TutteDec(base=td, graph=g)


# ---------------------------------------------------------------------------
# working copy used by the kernelization loops
# ---------------------------------------------------------------------------

class WorkingDecomposition:
    """Mutable (G', (T', X')) pair: vertex deletions propagate into the bags,
    after which leaf nodes whose bags sank into their parent are absorbed."""

    def __init__(self, g: Graph, td: TreeDec):
        self.graph = g.copy()
        self.dec = td.copy()
        if self.dec.root is None:
            self.dec.root = min(self.dec.bags)
        self._parent: dict[int, int | None] = {}
        self._children: dict[int, list[int]] = {i: [] for i in self.dec.bags}
        order = deque([self.dec.root])
        self._parent[self.dec.root] = None
        while order:
            i = order.popleft()
            for j in self.dec.node_neighbors(i):
                if j not in self._parent:
                    self._parent[j] = i
                    self._children[i].append(j)
                    order.append(j)
        for i in self._children:
            self._children[i].sort()

    @property
    def root(self) -> int:
        assert self.dec.root is not None
        return self.dec.root

    def alive(self, i: int) -> bool:
        return i in self.dec.bags

    def children(self, i: int) -> list[int]:
        return [j for j in self._children[i] if self.alive(j)]

    def bag(self, i: int) -> set[int]:
        return self.dec.bags[i]

    def adhesion_to_parent(self, j: int) -> set[int]:
        p = self._parent[j]
        assert p is not None
        return self.dec.bags[j] & self.dec.bags[p]

    def subtree_bag_union(self, i: int) -> set[int]:
        out: set[int] = set()
        stack = [i]
        while stack:
            v = stack.pop()
            out |= self.dec.bags[v]
            stack.extend(self.children(v))
        return out

    def subtree_size(self) -> int:
        return len(self.dec.bags)

    def delete_vertices(self, drop: Iterable[int]) -> None:
        drop_set = set(drop)
        if not drop_set:
            return
        self.graph.delete_vertices(drop_set)
        for bag in self.dec.bags.values():
            bag -= drop_set
        self._absorb_leaves()

    def _absorb_leaves(self) -> None:
        changed = True
        while changed:
            changed = False
            for i in sorted(self.dec.bags):
                if i == self.dec.root:
                    continue
                if self.children(i):
                    continue
                p = self._parent[i]
                assert p is not None
                if self.dec.bags[i] <= self.dec.bags[p]:
                    del self.dec.bags[i]
                    self.dec.tree_edges.discard(frozenset((i, p)))
                    self._children[p].remove(i)
                    changed = True
