"""Seeded instance generators for the cross-validation matrix.

Every generator is a pure function of (parameters, seed): identical inputs
give identical graphs, byte for byte after serialization.
"""

from __future__ import annotations

import math
import random

from .graph import Graph, GraphClass, GraphError

FAMILIES = ("planar-triangulation-subgraph", "subcubic", "line-graph",
            "grid", "planted-cycle")

FAMILY_CLASS = {
    "planar-triangulation-subgraph": GraphClass.planar(),
    "subcubic": GraphClass.max_degree(3),
    "line-graph": GraphClass.claw_free(),
    "grid": GraphClass.k3t_minor_free(3),
    "planted-cycle": GraphClass.planar(),
}


def random_maximal_planar(n: int, rng: random.Random) -> Graph:
    """Iterated face splitting from a triangle; 3-connected for n >= 4."""
    if n < 3:
        raise GraphError("triangulations need n >= 3")
    g = Graph(edges=[(0, 1), (1, 2), (0, 2)])
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        idx = rng.randrange(len(faces))
        a, b, c = faces.pop(idx)
        g.add_edge(v, a)
        g.add_edge(v, b)
        g.add_edge(v, c)
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    return g


def random_planar_subgraph(n: int, rng: random.Random,
                           keep: float | None = None) -> Graph:
    """Random triangulation, then independent edge subsampling."""
    g = random_maximal_planar(n, rng)
    p = rng.uniform(0.35, 1.0) if keep is None else keep
    out = Graph(vertices=g.vertices())
    for u, v in g.iter_edges():
        if rng.random() < p:
            out.add_edge(u, v)
    return out


def random_subcubic(n: int, rng: random.Random) -> Graph:
    if n < 3:
        raise GraphError("need n >= 3")
    g = Graph(vertices=range(n))
    target = rng.randint(n // 2, min(3 * n // 2, n * (n - 1) // 2))
    for _ in range(8 * n):
        if g.m >= target:
            break
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v and g.degree(u) < 3 and g.degree(v) < 3 and not g.has_edge(u, v):
            g.add_edge(u, v)
    return g


def random_line_graph(n: int, rng: random.Random) -> Graph:
    """Line graph of a random base graph with exactly n edges."""
    if n < 3:
        raise GraphError("need n >= 3")
    base_n = max(4, math.isqrt(2 * n) + 1)
    pairs = [(i, j) for i in range(base_n) for j in range(i + 1, base_n)]
    while len(pairs) < n:
        base_n += 1
        pairs = [(i, j) for i in range(base_n) for j in range(i + 1, base_n)]
    base_edges = sorted(rng.sample(pairs, n))
    g = Graph(vertices=range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if set(base_edges[i]) & set(base_edges[j]):
                g.add_edge(i, j)
    return g


def grid_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("need n >= 3")
    rows = max(2, math.isqrt(n))
    cols = max(2, n // rows)
    g = Graph(vertices=range(rows * cols))
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                g.add_edge(v, v + 1)
            if i + 1 < rows:
                g.add_edge(v, v + cols)
    return g


def planted_cycle_graph(n: int, k: int, rng: random.Random) -> Graph:
    """Planar graph guaranteed to contain a cycle of length >= k: grow a
    triangulated disk around a protected k-cycle, then subsample only the
    non-cycle edges."""
    k = max(k, 3)
    if n < k:
        raise GraphError(f"need n >= k = {k}")
    cycle_edges = {(i, (i + 1) % k) for i in range(k)}
    g = Graph(edges=[(min(u, v), max(u, v)) for u, v in cycle_edges])
    faces = [(0, i, i + 1) for i in range(1, k - 1)]
    for i in range(2, k - 1):
        g.add_edge(0, i)
    for v in range(k, n):
        idx = rng.randrange(len(faces))
        a, b, c = faces.pop(idx)
        g.add_edge(v, a)
        g.add_edge(v, b)
        g.add_edge(v, c)
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    protected = {(min(u, v), max(u, v)) for u, v in cycle_edges}
    p = rng.uniform(0.4, 1.0)
    out = Graph(vertices=g.vertices())
    for u, v in g.iter_edges():
        if (u, v) in protected or rng.random() < p:
            out.add_edge(u, v)
    return out


def gen_instance(family: str, n: int, seed: int,
                 plant_k: int = 6) -> tuple[Graph, GraphClass]:
    """Seeded generator dispatch; returns the graph and its declared class."""
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {FAMILIES}")
    if n < 3:
        raise GraphError("generators need n >= 3")
    rng = random.Random(seed)
    if family == "planar-triangulation-subgraph":
        g = random_planar_subgraph(n, rng)
    elif family == "subcubic":
        g = random_subcubic(n, rng)
    elif family == "line-graph":
        g = random_line_graph(n, rng)
    elif family == "grid":
        g = grid_graph(n)
    else:
        g = planted_cycle_graph(n, plant_k, rng)
    return g, FAMILY_CLASS[family]
