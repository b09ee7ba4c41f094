"""Exact long-path/long-cycle decision procedures, the budgeted oracle
session, and the two self-reduction engines built on top of it.

The exact solvers are deterministic and answer-correct at any size; a
configurable wall-clock limit turns pathological searches into an explicit
timeout error rather than a wrong answer. Cheap sound yes-detectors
(spanning-tree depth, back-edge span) run first, then bounded enumeration,
with a bitmask dynamic program taking over when the target length is large
relative to a small component.
"""

from __future__ import annotations

import os
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .decompose import biconnected_components
from .graph import Graph, GraphError, xy_extension


class OracleTimeout(Exception):
    """Exact search exceeded its wall-clock limit; never a wrong answer."""


class BudgetExceeded(Exception):
    """A query broke the session's size/parameter contract."""

    def __init__(self, order: int, param: int, budget_vertices: int, budget_param: int):
        self.order = order
        self.param = param
        self.budget_vertices = budget_vertices
        self.budget_param = budget_param
        super().__init__(
            f"query order={order} param={param} exceeds budgets "
            f"(vertices<={budget_vertices}, param<={budget_param})")


_DP_MAX_N = 18          # bitmask DP cutoff
_DP_MIN_TARGET = 9      # below this plain enumeration is cheaper


def _default_time_limit_ms() -> float | None:
    raw = os.environ.get("TK_TIME_LIMIT_MS")
    if raw is None:
        return 60_000.0
    raw = raw.strip()
    if raw in ("", "0", "none"):
        return None
    return float(raw)


@dataclass(frozen=True)
class SolverConfig:
    time_limit_ms: float | None = None
    dp_max_n: int = _DP_MAX_N

    @classmethod
    def from_env(cls) -> "SolverConfig":
        return cls(time_limit_ms=_default_time_limit_ms())


def _config(config: SolverConfig | None) -> SolverConfig:
    return config if config is not None else SolverConfig.from_env()


class _Deadline:
    __slots__ = ("t_end", "ticks")

    def __init__(self, limit_ms: float | None):
        self.t_end = None if limit_ms is None else time.monotonic() + limit_ms / 1000.0
        self.ticks = 0

    def tick(self) -> None:
        if self.t_end is None:
            return
        self.ticks += 1
        if (self.ticks & 4095) == 0 and time.monotonic() > self.t_end:
            raise OracleTimeout("exact search exceeded the configured time limit")


# ---------------------------------------------------------------------------
# local array form
# ---------------------------------------------------------------------------

def _local_adj(g: Graph, comp: list[int]) -> tuple[list[list[int]], dict[int, int]]:
    idx = {v: i for i, v in enumerate(comp)}
    adj = [[idx[u] for u in g.neighbors(v) if u in idx] for v in comp]
    return adj, idx


# ---------------------------------------------------------------------------
# sound yes-detectors (witness-producing, never wrong on yes)
# ---------------------------------------------------------------------------

def _tree_deep_path(adj: list[list[int]], k: int) -> list[int] | None:
    """Two-sweep spanning-tree probe: a tree chain with >= k edges, if found."""
    n = len(adj)

    def sweep(root: int) -> tuple[int, list[int], list[int]]:
        parent = [-2] * n
        depth = [0] * n
        parent[root] = -1
        best = root
        stack = [root]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if parent[u] == -2:
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    if depth[u] > depth[best]:
                        best = u
                    stack.append(u)
        return best, parent, depth

    b1, _, _ = sweep(0)
    b2, parent, depth = sweep(b1)
    if depth[b2] < k:
        return None
    path = [b2]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def _backedge_long_cycle(adj: list[list[int]], k: int) -> list[int] | None:
    """Proper DFS; a back edge spanning >= k-1 levels closes a >= k cycle."""
    n = len(adj)
    depth = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        stack: list[tuple[int, object]] = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            moved = False
            for u in it:
                if depth[u] < 0:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    stack.append((u, iter(adj[u])))
                    moved = True
                    break
                elif u != parent[v] and depth[v] - depth[u] + 1 >= k:
                    cycle = [v]
                    w = v
                    while w != u:
                        w = parent[w]
                        cycle.append(w)
                    return cycle
            if not moved:
                stack.pop()
    return None


# ---------------------------------------------------------------------------
# exhaustive searches
# ---------------------------------------------------------------------------

def _enum_path_atleast(adj: list[list[int]], k: int, dl: _Deadline,
                       collect: bool = False) -> list[int] | bool:
    n = len(adj)
    visited = bytearray(n)
    path: list[int] = []

    def go(v: int, depth: int):
        if depth >= k:
            return path + [v] if collect else True
        visited[v] = 1
        if collect:
            path.append(v)
        for u in adj[v]:
            if not visited[u]:
                dl.tick()
                got = go(u, depth + 1)
                if got:
                    return got
        visited[v] = 0
        if collect:
            path.pop()
        return False

    for s in range(n):
        got = go(s, 0)
        if got:
            return got
    return None if collect else False


def _bb_path_atleast(adj: list[list[int]], k: int, dl: _Deadline) -> bool:
    """Enumeration with reachability pruning, for large length targets."""
    n = len(adj)
    visited = bytearray(n)

    def reach_from(v: int) -> int:
        seen = bytearray(n)
        seen[v] = 1
        queue = deque([v])
        cnt = 1
        while queue:
            w = queue.popleft()
            for u in adj[w]:
                if not seen[u] and not visited[u]:
                    seen[u] = 1
                    cnt += 1
                    queue.append(u)
        return cnt

    def go(v: int, depth: int) -> bool:
        if depth >= k:
            return True
        visited[v] = 1
        if depth + reach_from(v) - 1 >= k:
            for u in adj[v]:
                if not visited[u]:
                    dl.tick()
                    if go(u, depth + 1):
                        return True
        visited[v] = 0
        return False

    for s in range(n):
        if go(s, 0):
            return True
    return False


def _dp_path_atleast(adj: list[list[int]], k: int) -> bool:
    n = len(adj)
    if k + 1 > n:
        return False
    frontier: dict[int, int] = {1 << v: 1 << v for v in range(n)}
    for _ in range(k):
        nxt: dict[int, int] = {}
        for mask, ends in frontier.items():
            e = ends
            while e:
                v = (e & -e).bit_length() - 1
                e &= e - 1
                for u in adj[v]:
                    bit = 1 << u
                    if not mask & bit:
                        nm = mask | bit
                        nxt[nm] = nxt.get(nm, 0) | bit
        if not nxt:
            return False
        frontier = nxt
    return True


def _enum_cycle_atleast(adj: list[list[int]], k: int, dl: _Deadline,
                        collect: bool = False) -> list[int] | bool:
    """Cycles are enumerated once each, anchored at their smallest vertex."""
    n = len(adj)
    visited = bytearray(n)
    path: list[int] = []

    def go(s: int, v: int, depth: int):
        visited[v] = 1
        if collect:
            path.append(v)
        for u in adj[v]:
            if u == s:
                if depth >= k - 1:
                    return list(path) if collect else True
            elif u > s and not visited[u]:
                dl.tick()
                got = go(s, u, depth + 1)
                if got:
                    return got
        visited[v] = 0
        if collect:
            path.pop()
        return False

    for s in range(n):
        if n - s < k:
            break
        visited[s] = 1
        if collect:
            path.append(s)
        for u in adj[s]:
            if u > s:
                got = go(s, u, 1)
                if got:
                    return got
        visited[s] = 0
        if collect:
            path.pop()
    return None if collect else False


def _bb_cycle_atleast(adj: list[list[int]], k: int, dl: _Deadline) -> bool:
    n = len(adj)
    visited = bytearray(n)

    def closing_reach(v: int, s: int) -> tuple[bool, int]:
        seen = bytearray(n)
        seen[v] = 1
        queue = deque([v])
        cnt = 1
        hit = False
        while queue:
            w = queue.popleft()
            for u in adj[w]:
                if u == s:
                    hit = True
                elif u > s and not seen[u] and not visited[u]:
                    seen[u] = 1
                    cnt += 1
                    queue.append(u)
        return hit, cnt

    def go(s: int, v: int, depth: int) -> bool:
        visited[v] = 1
        closable, cnt = closing_reach(v, s)
        if closable and depth + cnt >= k:
            for u in adj[v]:
                if u == s:
                    if depth >= k - 1:
                        return True
                elif u > s and not visited[u]:
                    dl.tick()
                    if go(s, u, depth + 1):
                        return True
        visited[v] = 0
        return False

    for s in range(n):
        if n - s < k:
            break
        visited[s] = 1
        if any(u > s and go(s, u, 1) for u in adj[s]):
            return True
        visited[s] = 0
    return False


def _dp_cycle_atleast(adj: list[list[int]], k: int) -> bool:
    n = len(adj)
    for s in range(n):
        if n - s < k:
            break
        back = {u for u in adj[s] if u > s}
        frontier: dict[int, int] = {}
        for u in adj[s]:
            if u > s:
                frontier[1 << u] = 1 << u
        edges_used = 1
        while frontier:
            if edges_used >= k - 1:
                for mask, ends in frontier.items():
                    e = ends
                    while e:
                        v = (e & -e).bit_length() - 1
                        e &= e - 1
                        if v in back:
                            return True
            nxt: dict[int, int] = {}
            for mask, ends in frontier.items():
                e = ends
                while e:
                    v = (e & -e).bit_length() - 1
                    e &= e - 1
                    for u in adj[v]:
                        bit = 1 << u
                        if u > s and not mask & bit:
                            nm = mask | bit
                            nxt[nm] = nxt.get(nm, 0) | bit
            frontier = nxt
            edges_used += 1
            if edges_used > n:
                break
    return False


# ---------------------------------------------------------------------------
# public decision procedures
# ---------------------------------------------------------------------------

def exact_k_path(g: Graph, k: int, config: SolverConfig | None = None) -> bool:
    """True iff g has a simple path with at least k edges."""
    cfg = _config(config)
    if k <= 0:
        return g.n > 0
    if k == 1:
        return g.m > 0
    dl = _Deadline(cfg.time_limit_ms)
    for comp in g.connected_components():
        if len(comp) < k + 1:
            continue
        adj, _ = _local_adj(g, comp)
        if _tree_deep_path(adj, k) is not None:
            return True
        if k >= _DP_MIN_TARGET and len(comp) <= cfg.dp_max_n:
            if _dp_path_atleast(adj, k):
                return True
        elif k >= _DP_MIN_TARGET:
            if _bb_path_atleast(adj, k, dl):
                return True
        else:
            if _enum_path_atleast(adj, k, dl):
                return True
    return False


def exact_k_cycle(g: Graph, k: int, config: SolverConfig | None = None) -> bool:
    """True iff g has a cycle with at least k edges (k below 3 reads as 3)."""
    cfg = _config(config)
    k = max(k, 3)
    dl = _Deadline(cfg.time_limit_ms)
    blocks, _ = biconnected_components(g)
    for block in blocks:
        if block.n < k:
            continue
        comp = block.vertices()
        adj, _ = _local_adj(block, comp)
        if _backedge_long_cycle(adj, k) is not None:
            return True
        if k >= _DP_MIN_TARGET and len(comp) <= cfg.dp_max_n:
            if _dp_cycle_atleast(adj, k):
                return True
        elif k >= _DP_MIN_TARGET:
            if _bb_cycle_atleast(adj, k, dl):
                return True
        else:
            if _enum_cycle_atleast(adj, k, dl):
                return True
    return False


def find_path_atleast(g: Graph, k: int, config: SolverConfig | None = None) -> list[int] | None:
    """An explicit path with >= k edges, or None if no such path exists."""
    cfg = _config(config)
    if k <= 0:
        verts = g.vertices()
        return [verts[0]] if verts else None
    dl = _Deadline(cfg.time_limit_ms)
    for comp in g.connected_components():
        if len(comp) < k + 1:
            continue
        adj, _ = _local_adj(g, comp)
        hit = _tree_deep_path(adj, k)
        if hit is None:
            hit = _enum_path_atleast(adj, k, dl, collect=True)
        if hit is not None:
            return [comp[i] for i in hit]
    return None


def find_cycle_atleast(g: Graph, k: int, config: SolverConfig | None = None) -> list[int] | None:
    """An explicit cycle with >= k edges (as a vertex sequence), or None."""
    cfg = _config(config)
    k = max(k, 3)
    dl = _Deadline(cfg.time_limit_ms)
    blocks, _ = biconnected_components(g)
    for block in blocks:
        if block.n < k:
            continue
        comp = block.vertices()
        adj, _ = _local_adj(block, comp)
        hit = _backedge_long_cycle(adj, k)
        if hit is None:
            hit = _enum_cycle_atleast(adj, k, dl, collect=True)
        if hit:
            return [comp[i] for i in hit]
    return None


# ---------------------------------------------------------------------------
# terminal-constrained decisions for stable edge properties
# ---------------------------------------------------------------------------

def _dp_terminal_path_atleast(adj, start: int, target: int, want_end: int | None) -> bool:
    n = len(adj)
    if target + 1 > n:
        return False
    frontier: dict[int, int] = {1 << start: 1 << start}
    edges_used = 0
    while frontier:
        if edges_used >= target:
            if want_end is None:
                return True
            for ends in frontier.values():
                if ends >> want_end & 1:
                    return True
        nxt: dict[int, int] = {}
        for mask, ends in frontier.items():
            e = ends
            while e:
                v = (e & -e).bit_length() - 1
                e &= e - 1
                if want_end is not None and v == want_end:
                    continue  # terminal paths end there
                for u in adj[v]:
                    bit = 1 << u
                    if not mask & bit:
                        nm = mask | bit
                        nxt[nm] = nxt.get(nm, 0) | bit
        frontier = nxt
        edges_used += 1
        if edges_used > n:
            break
    return False


def _enum_terminal_path_atleast(adj, start: int, target: int,
                                want_end: int | None, dl: _Deadline) -> bool:
    n = len(adj)
    visited = bytearray(n)

    def go(v: int, depth: int) -> bool:
        if want_end is None:
            if depth >= target:
                return True
        elif v == want_end:
            return depth >= target  # never extend past the far terminal
        visited[v] = 1
        for u in adj[v]:
            if not visited[u]:
                dl.tick()
                if go(u, depth + 1):
                    return True
        visited[v] = 0
        return False

    return go(start, 0)


def x_path_atleast(g: Graph, x: int, target: int,
                   config: SolverConfig | None = None) -> bool:
    """True iff some simple path with endpoint x has >= target edges."""
    cfg = _config(config)
    if target <= 0:
        return g.has_vertex(x)
    comp = sorted(g.component_of(x))
    if len(comp) < target + 1:
        return False
    adj, idx = _local_adj(g, comp)
    dl = _Deadline(cfg.time_limit_ms)
    if target >= _DP_MIN_TARGET and len(comp) <= cfg.dp_max_n:
        return _dp_terminal_path_atleast(adj, idx[x], target, None)
    return _enum_terminal_path_atleast(adj, idx[x], target, None, dl)


def xy_path_atleast(g: Graph, x: int, y: int, target: int,
                    config: SolverConfig | None = None) -> bool:
    """True iff some simple xy-path has >= target edges."""
    cfg = _config(config)
    if x == y:
        return target <= 0
    if target <= 0:
        return y in g.component_of(x)
    comp = sorted(g.component_of(x))
    if y not in set(comp) or len(comp) < target + 1:
        return False
    adj, idx = _local_adj(g, comp)
    dl = _Deadline(cfg.time_limit_ms)
    if target >= _DP_MIN_TARGET and len(comp) <= cfg.dp_max_n:
        return _dp_terminal_path_atleast(adj, idx[x], target, idx[y])
    return _enum_terminal_path_atleast(adj, idx[x], target, idx[y], dl)


def two_end_paths_atleast(g: Graph, x: int, y: int, target: int,
                          config: SolverConfig | None = None) -> bool:
    """True iff two vertex-disjoint paths, one ending in x and one in y,
    together carry >= target edges."""
    cfg = _config(config)
    if x == y:
        return False
    if target <= 0:
        return g.has_vertex(x) and g.has_vertex(y)
    comp = sorted(g.component_of(x) | g.component_of(y))
    adj, idx = _local_adj(g, comp)
    xi, yi = idx[x], idx[y]
    n = len(adj)
    visited = bytearray(n)
    visited[yi] = 1  # the x-path may never touch y
    dl = _Deadline(cfg.time_limit_ms)

    def y_side_atleast(need: int) -> bool:
        if need <= 0:
            return True

        def go(v: int, depth: int) -> bool:
            if depth >= need:
                return True
            visited[v] = 1
            for u in adj[v]:
                if not visited[u]:
                    dl.tick()
                    if go(u, depth + 1):
                        visited[v] = 0
                        return True
            visited[v] = 0
            return False

        ok = go(yi, 0)
        visited[yi] = 1  # keep y fenced off from the x-path search
        return ok

    def go_x(v: int, depth: int) -> bool:
        if depth >= target:
            return True
        visited[v] = 1
        if y_side_atleast(target - depth):
            visited[v] = 0
            return True
        for u in adj[v]:
            if u != yi and not visited[u]:
                dl.tick()
                if go_x(u, depth + 1):
                    return True
        visited[v] = 0
        return False

    return go_x(xi, 0)


# ---------------------------------------------------------------------------
# stable 2-terminal edge properties
# ---------------------------------------------------------------------------

def _edge_set_components(edge_set: frozenset[tuple[int, int]]) -> list[tuple[set[int], list[tuple[int, int]]]]:
    adj: dict[int, list[int]] = {}
    for u, v in edge_set:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        verts = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for u in adj[w]:
                if u not in seen:
                    seen.add(u)
                    verts.add(u)
                    queue.append(u)
        comp_edges = [(u, v) for (u, v) in edge_set if u in verts]
        comps.append((verts, comp_edges))
    return comps


def _is_path_edge_set(verts: set[int], edges: list[tuple[int, int]]) -> tuple[int, int] | None:
    """If the edges form a simple path, return its endpoints, else None."""
    if len(edges) != len(verts) - 1:
        return None
    deg: dict[int, int] = {v: 0 for v in verts}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    ends = sorted(v for v, d in deg.items() if d == 1)
    if len(ends) != 2 or any(d > 2 for d in deg.values()):
        return None
    return (ends[0], ends[1])


def _eval_xy_path(g: Graph, x: int, y: int, edge_set: frozenset[tuple[int, int]]) -> bool:
    if not edge_set:
        return x == y
    if x == y:
        return False
    comps = _edge_set_components(edge_set)
    if len(comps) != 1:
        return False
    ends = _is_path_edge_set(*comps[0])
    return ends is not None and set(ends) == {x, y}


def _eval_x_path(g: Graph, x: int, y: int, edge_set: frozenset[tuple[int, int]]) -> bool:
    if not edge_set:
        return g.has_vertex(x)
    comps = _edge_set_components(edge_set)
    if len(comps) != 1:
        return False
    ends = _is_path_edge_set(*comps[0])
    return ends is not None and x in ends


def _eval_two_end_paths(g: Graph, x: int, y: int, edge_set: frozenset[tuple[int, int]]) -> bool:
    if x == y:
        return False
    comps = _edge_set_components(edge_set)
    if len(comps) > 2:
        return False
    ends_per_comp = []
    for verts, edges in comps:
        ends = _is_path_edge_set(verts, edges)
        if ends is None:
            return False
        ends_per_comp.append((verts, ends))
    # assign components to the two terminals; unassigned terminals use a
    # trivial path, which must avoid every used vertex
    def assign(order: list[tuple[set[int], tuple[int, int]]]) -> bool:
        used_terminals = []
        for verts, ends in order:
            if x in ends and x not in used_terminals:
                used_terminals.append(x)
            elif y in ends and y not in used_terminals:
                used_terminals.append(y)
            else:
                return False
        all_verts: set[int] = set()
        for verts, _ in order:
            all_verts |= verts
        if x not in used_terminals and x in all_verts:
            return False
        if y not in used_terminals and y in all_verts:
            return False
        # both terminals on one component is invalid pairing handled above
        return True

    if not comps:
        return True
    if len(ends_per_comp) == 1:
        return assign(ends_per_comp)
    return assign(ends_per_comp) or assign(ends_per_comp[::-1])


@dataclass(frozen=True)
class StableEdgeProperty:
    """Edge-set predicate preserved by passing to any subgraph containing
    the terminals and the edge set."""

    name: str
    evaluator: Callable[[Graph, int, int, frozenset], bool] = field(compare=False)

    def decide_atleast(self, g: Graph, x: int, y: int, size: int,
                       config: SolverConfig | None = None) -> bool:
        if self.name == "xypath":
            return xy_path_atleast(g, x, y, size, config)
        if self.name == "xpath":
            return x_path_atleast(g, x, size, config)
        if self.name == "two-end-paths":
            return two_end_paths_atleast(g, x, y, size, config)
        raise GraphError(f"no decision procedure for property {self.name!r}")


XY_PATH = StableEdgeProperty("xypath", _eval_xy_path)
X_PATH = StableEdgeProperty("xpath", _eval_x_path)
TWO_DISJOINT_END_PATHS = StableEdgeProperty("two-end-paths", _eval_two_end_paths)

BUILTIN_PROPERTIES = (XY_PATH, X_PATH, TWO_DISJOINT_END_PATHS)


# ---------------------------------------------------------------------------
# oracle session
# ---------------------------------------------------------------------------

@dataclass
class QueryRecord:
    seq: int
    purpose: str
    problem: str
    n: int
    m: int
    k: int
    answer: bool
    micros: int

    def to_dict(self, deterministic: bool = True) -> dict:
        return {
            "seq": self.seq,
            "purpose": self.purpose,
            "problem": self.problem,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "answer": self.answer,
            "micros": 0 if deterministic else self.micros,
        }


class OracleSession:
    """Budgeted, logged access to the exact decision procedures.

    Every query must satisfy order <= budget_vertices and parameter <=
    budget_param; a violation raises BudgetExceeded and signals a broken
    size contract, not a recoverable condition.
    """

    def __init__(self, budget_vertices: int, budget_param: int,
                 config: SolverConfig | None = None,
                 on_query: Callable[[Graph, str, int, str], None] | None = None):
        self.budget_vertices = budget_vertices
        self.budget_param = budget_param
        self.config = _config(config)
        self.on_query = on_query
        self.log: list[QueryRecord] = []

    @property
    def num_queries(self) -> int:
        return len(self.log)

    def max_query_order(self) -> int:
        return max((r.n for r in self.log), default=0)

    def _admit(self, order: int, param: int) -> None:
        if order > self.budget_vertices or param > self.budget_param:
            raise BudgetExceeded(order, param, self.budget_vertices, self.budget_param)

    def _record(self, purpose: str, problem: str, g: Graph, k: int,
                answer: bool, micros: int) -> None:
        self.log.append(QueryRecord(
            seq=len(self.log), purpose=purpose, problem=problem,
            n=g.n, m=g.m, k=k, answer=answer, micros=micros))

    def query(self, problem: str, g: Graph, k: int, purpose: str) -> bool:
        if problem not in ("path", "cycle"):
            raise GraphError(f"unknown problem {problem!r}")
        self._admit(g.n, k)
        if self.on_query is not None:
            self.on_query(g, problem, k, purpose)
        t0 = time.perf_counter()
        if problem == "path":
            answer = exact_k_path(g, k, self.config)
        else:
            answer = exact_k_cycle(g, k, self.config)
        micros = int((time.perf_counter() - t0) * 1e6)
        self._record(purpose, problem, g, k, answer, micros)
        return answer

    def query_property(self, prop: StableEdgeProperty, g: Graph, x: int, y: int,
                       size: int, purpose: str) -> bool:
        self._admit(g.n, size)
        if self.on_query is not None:
            self.on_query(g, prop.name, size, purpose)
        t0 = time.perf_counter()
        answer = prop.decide_atleast(g, x, y, size, self.config)
        micros = int((time.perf_counter() - t0) * 1e6)
        self._record(purpose, prop.name, g, size, answer, micros)
        return answer


# ---------------------------------------------------------------------------
# self-reductions
# ---------------------------------------------------------------------------

K_CYCLE_FOUND = "k-cycle-found"
LONG_XY_PATH = "long-xy-path"
MAX_PATH_VERTICES = "max-path-vertices"


@dataclass(frozen=True)
class SelfReduceOutcome:
    variant: str
    vertices: frozenset[int] | None = None

    @classmethod
    def k_cycle_found(cls) -> "SelfReduceOutcome":
        return cls(K_CYCLE_FOUND)

    @classmethod
    def long_xy_path(cls) -> "SelfReduceOutcome":
        return cls(LONG_XY_PATH)

    @classmethod
    def max_path(cls, vertices: frozenset[int]) -> "SelfReduceOutcome":
        return cls(MAX_PATH_VERTICES, vertices)


def selfreduce_longest_xy_path(session: OracleSession, g: Graph, k: int,
                               x: int, y: int,
                               purpose: str = "selfreduce-xy") -> SelfReduceOutcome:
    """Decide a long structure or extract the vertex set of a maximum xy-path.

    Either reports that g has a k-cycle, or that g has an xy-path of length
    at least k-1, or returns the unordered vertex set of a maximum-length
    xy-path (empty if x and y are disconnected). All queries are cycle
    queries with parameter k on xy-extensions of g.
    """
    if x == y:
        raise GraphError("terminals must be distinct")
    if k < 3:
        raise GraphError("cycle parameter is normalized to k >= 3")
    if session.query("cycle", g, k, f"{purpose}:base"):
        return SelfReduceOutcome.k_cycle_found()
    if y not in g.component_of(x):
        return SelfReduceOutcome.max_path(frozenset())
    g0 = g.copy()
    if not g0.has_edge(x, y):
        g0.add_edge(x, y)
    if session.query("cycle", g0, k, f"{purpose}:direct-edge"):
        return SelfReduceOutcome.long_xy_path()

    # phase 1: determine the maximum xy-path length via padded extensions
    ell_star = None
    for ell in range(1, k - 1):
        g_ell = xy_extension(g, x, y, ell + 1)
        if session.query("cycle", g_ell, k, f"{purpose}:pad-{ell}"):
            ell_star = ell
            break
    assert ell_star is not None, "padded instance at k-2 must contain a k-cycle"

    # phase 2: vertex-deletion sweep in increasing id order
    base_id = g.max_vertex() + 1
    added = set(range(base_id, base_id + ell_star))
    h = xy_extension(g, x, y, ell_star + 1)
    for u in sorted(h.vertices()):
        trial = h.without_vertices([u])
        if session.query("cycle", trial, k, f"{purpose}:drop-{u}"):
            h = trial
    survivors = frozenset(h.vertex_set() - added)
    assert len(survivors) == k - ell_star, "sweep must leave a Hamiltonian k-cycle"
    return SelfReduceOutcome.max_path(survivors)


def selfreduce_max_stable_set(session: OracleSession, g: Graph, x: int, y: int,
                              prop: StableEdgeProperty,
                              purpose: str = "selfreduce-stable") -> frozenset[tuple[int, int]] | None:
    """Maximum-cardinality edge set satisfying the property, or None when no
    nonempty edge set does. Size search first, then an edge-deletion sweep."""
    m = g.m
    if m == 0:
        return None
    if not session.query_property(prop, g, x, y, 1, f"{purpose}:size-1"):
        return None
    lo, hi = 1, m
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if session.query_property(prop, g, x, y, mid, f"{purpose}:size-{mid}"):
            lo = mid
        else:
            hi = mid - 1
    k_star = lo

    h = g.copy()
    for u, v in g.edges():
        trial = h.without_edge(u, v)
        if session.query_property(prop, trial, x, y, k_star, f"{purpose}:drop-{u}-{v}"):
            h = trial
    result = frozenset(h.edges())
    assert len(result) == k_star, "sweep must leave exactly one maximum witness"
    return result
