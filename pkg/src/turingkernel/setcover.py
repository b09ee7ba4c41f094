"""Parameter-preserving transformation from exact set cover to colorful
long-path detection on maximum-degree-3 graphs, plus the desk-scale exact
procedures used to verify it.

The instance threads 2(n-1) complete binary trees in a row; between
consecutive trees a traversal either walks a path encoding one chosen set
or takes a skip edge between the last leaves. Tree levels get one color
each, universe elements one color each, so a full-palette path must cross
set paths that cover the universe exactly once. Covers made of n singleton
sets cannot thread through n-1 slots, so instances whose family contains
every singleton are answered directly before building the graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError
from .oracle import OracleTimeout, SolverConfig, _Deadline, _config, _local_adj

MAX_DP_UNIVERSE = 24


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe {1..n} and a list of subsets (duplicates and empties allowed)."""

    universe_size: int
    families: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.universe_size < 0:
            raise GraphError("universe size must be non-negative")
        for s in self.families:
            if any(not 1 <= e <= self.universe_size for e in s):
                raise GraphError(f"set {sorted(s)} leaves the universe")

    @classmethod
    def of(cls, n: int, sets) -> "SetCoverInstance":
        return cls(n, tuple(frozenset(s) for s in sets))


@dataclass(frozen=True)
class SolvedDirectly:
    answer: bool
    why: str


@dataclass
class ColoredGraphInstance:
    graph: Graph
    coloring: dict[int, int]
    k_prime: int
    roots: dict[str, int] = field(default_factory=dict)

    @property
    def palette_size(self) -> int:
        return len(set(self.coloring.values()))


def exact_set_cover_dp(sc: SetCoverInstance) -> bool:
    """Subset dynamic program over the universe; desk scale only."""
    n = sc.universe_size
    if n > MAX_DP_UNIVERSE:
        raise GraphError(f"universe size {n} exceeds the desk-scale limit {MAX_DP_UNIVERSE}")
    masks = sorted({sum(1 << (e - 1) for e in s) for s in sc.families if s})
    full = (1 << n) - 1
    reachable = bytearray(1 << n)
    reachable[0] = 1
    for mask in range(1 << n):
        if not reachable[mask]:
            continue
        if mask == full:
            return True
        for bs in masks:
            if not mask & bs:
                reachable[mask | bs] = 1
    return bool(reachable[full])


def reduce_setcover_to_multicolored_path(sc: SetCoverInstance) -> ColoredGraphInstance | SolvedDirectly:
    """Build the colored instance, or answer outright when the graph cannot
    faithfully encode the instance (tiny universes, saturated families,
    all-singleton covers)."""
    n = sc.universe_size
    if n < 2:
        return SolvedDirectly(exact_set_cover_dp(sc), "universe below encoding size")
    sets = [s for s in sc.families if s]
    present = set(sets)
    if all(frozenset({u}) in present for u in range(1, n + 1)):
        return SolvedDirectly(True, "every singleton present: the singleton cover is exact")
    if not sets:
        return SolvedDirectly(False, "no nonempty sets")
    if len(sets) >= 2 ** n:
        return SolvedDirectly(exact_set_cover_dp(sc), "family size saturates the universe")

    r = 1
    while 2 ** r - 1 < len(sets):
        r += 1
    sets = sets + [sets[-1]] * (2 ** r - 1 - len(sets))
    num_leaves = 2 ** r
    k_prime = n + 2 * (n - 1) * (r + 1) - 1

    g = Graph()
    coloring: dict[int, int] = {}
    next_vertex = [0]
    next_color = [0]

    def fresh_vertex(color: int) -> int:
        v = next_vertex[0]
        next_vertex[0] += 1
        g.add_vertex(v)
        coloring[v] = color
        return v

    element_color = {}
    tree_levels: dict[str, list[list[int]]] = {}
    roots: dict[str, int] = {}

    def build_tree(name: str) -> None:
        levels: list[list[int]] = []
        for level in range(r + 1):
            color = next_color[0]
            next_color[0] += 1
            levels.append([fresh_vertex(color) for _ in range(2 ** level)])
        for level in range(r):
            for pos, v in enumerate(levels[level]):
                g.add_edge(v, levels[level + 1][2 * pos])
                g.add_edge(v, levels[level + 1][2 * pos + 1])
        tree_levels[name] = levels
        roots[name] = levels[0][0]

    # trees in row order O_1, I_2, O_2, I_3, ..., O_{n-1}, I_n
    for i in range(1, n):
        build_tree(f"O{i}")
        build_tree(f"I{i + 1}")
    for u in range(1, n + 1):
        element_color[u] = next_color[0]
        next_color[0] += 1

    for i in range(2, n):
        g.add_edge(roots[f"I{i}"], roots[f"O{i}"])

    for j in range(1, num_leaves):           # set paths use leaves 1..2^r - 1
        fj = sorted(sets[j - 1])
        for i in range(1, n):
            chain = [fresh_vertex(element_color[e]) for e in fj]
            for a, b in zip(chain, chain[1:]):
                g.add_edge(a, b)
            g.add_edge(chain[0], tree_levels[f"O{i}"][r][j - 1])
            g.add_edge(chain[-1], tree_levels[f"I{i + 1}"][r][j - 1])
    for i in range(1, n):                     # skip edges between last leaves
        g.add_edge(tree_levels[f"O{i}"][r][num_leaves - 1],
                   tree_levels[f"I{i + 1}"][r][num_leaves - 1])

    assert max(g.degree(v) for v in g.vertices()) <= 3
    assert next_color[0] == k_prime + 1
    return ColoredGraphInstance(graph=g, coloring=coloring, k_prime=k_prime, roots=roots)


def multicolored_path_exact(ci: ColoredGraphInstance,
                            config: SolverConfig | None = None) -> bool:
    """Brute-force check for a path of length exactly k' whose vertices use
    every color exactly once. Desk-scale verifier."""
    cfg = _config(config)
    g = ci.graph
    target = ci.k_prime
    comp_cache: dict[int, None] = {}
    verts = g.vertices()
    idx = {v: i for i, v in enumerate(verts)}
    adj = [[idx[u] for u in g.neighbors(v)] for v in verts]
    colors = [ci.coloring[v] for v in verts]
    dl = _Deadline(cfg.time_limit_ms)
    n = len(verts)
    visited = bytearray(n)
    used_colors: set[int] = set()

    def go(v: int, depth: int) -> bool:
        if depth == target:
            return True
        visited[v] = 1
        for u in adj[v]:
            cu = colors[u]
            if not visited[u] and cu not in used_colors:
                dl.tick()
                used_colors.add(cu)
                if go(u, depth + 1):
                    return True
                used_colors.discard(cu)
        visited[v] = 0
        return False

    for s in range(n):
        used_colors.clear()
        used_colors.add(colors[s])
        if go(s, 0):
            return True
    return False


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def parse_setcover(text: str) -> SetCoverInstance:
    n = None
    sets: list[frozenset[int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "u":
            if n is not None:
                raise GraphError(f"line {ln}: duplicate universe line")
            if len(parts) != 2:
                raise GraphError(f"line {ln}: expected 'u <n>'")
            n = int(parts[1])
        elif parts[0] == "s":
            if n is None:
                raise GraphError(f"line {ln}: set before universe line")
            try:
                elems = [int(p) for p in parts[1:]]
            except ValueError:
                raise GraphError(f"line {ln}: non-integer element") from None
            if any(not 1 <= e <= n for e in elems):
                raise GraphError(f"line {ln}: element outside 1..{n}")
            sets.append(frozenset(elems))
        else:
            raise GraphError(f"line {ln}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphError("missing universe line 'u <n>'")
    return SetCoverInstance(n, tuple(sets))


def format_setcover(sc: SetCoverInstance) -> str:
    lines = [f"u {sc.universe_size}"]
    for s in sc.families:
        lines.append(("s " + " ".join(str(e) for e in sorted(s))).rstrip())
    return "\n".join(lines) + "\n"


def format_colored_graph(ci: ColoredGraphInstance) -> str:
    """Edge-list records plus one 'n <vertex> <color>' line per vertex, 1-based."""
    g = ci.graph
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in g.iter_edges():
        lines.append(f"e {u + 1} {v + 1}")
    for v in g.vertices():
        lines.append(f"n {v + 1} {ci.coloring[v] + 1}")
    return "\n".join(lines) + "\n"


def parse_colored_graph(text: str) -> ColoredGraphInstance:
    g = Graph()
    coloring: dict[int, int] = {}
    n_declared = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            n_declared = int(parts[2])
            for v in range(n_declared):
                g.add_vertex(v)
        elif parts[0] == "e":
            g.add_edge(int(parts[1]) - 1, int(parts[2]) - 1)
        elif parts[0] == "n":
            coloring[int(parts[1]) - 1] = int(parts[2]) - 1
        else:
            raise GraphError(f"line {ln}: unknown record {parts[0]!r}")
    if n_declared is None or set(coloring) != g.vertex_set():
        raise GraphError("colored graph needs a color for every vertex")
    k_prime = len(set(coloring.values())) - 1
    return ColoredGraphInstance(graph=g, coloring=coloring, k_prime=k_prime)
