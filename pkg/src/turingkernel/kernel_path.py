"""Long-path kernelization: like the cycle pipeline, but run per connected
component, over separations of order one or two, and retaining six witness
structures per order-2 separation (every way a long path can cross it)."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .decompose import WorkingDecomposition, torso, tutte_decompose
from .graph import Graph, GraphClass, GraphError, Separation
from .kernel_common import (KernelResult, Reported, YesContext,
                            YES_FINAL_QUERY, YES_ORACLE_A_SIDE, YES_TRIVIAL,
                            YES_WIDTH)
from .oracle import (TWO_DISJOINT_END_PATHS, X_PATH, XY_PATH, OracleSession,
                     SolverConfig, selfreduce_max_stable_set)
from .thresholds import default_query_budget, width_threshold


@dataclass(frozen=True)
class WitnessSet:
    """Vertex sets of the six retained structures on the A-side:
    max x-path avoiding y, max y-path avoiding x, max x-path, max y-path,
    max xy-path (empty if none), and a max-total pair of disjoint end paths."""

    p1: frozenset[int]
    p2: frozenset[int]
    p3: frozenset[int]
    p4: frozenset[int]
    p5: frozenset[int]
    p6: frozenset[int]

    def union(self) -> frozenset[int]:
        return self.p1 | self.p2 | self.p3 | self.p4 | self.p5 | self.p6

    def as_tuple(self):
        return (self.p1, self.p2, self.p3, self.p4, self.p5, self.p6)


@dataclass(frozen=True)
class PathKernelConfig:
    graph_class: GraphClass
    k: int
    width_threshold: int   # computed at k+1: circumference k+1 forces a k-path
    query_budget: int

    @classmethod
    def for_instance(cls, graph_class: GraphClass, k: int) -> "PathKernelConfig":
        budget, _ = default_query_budget(graph_class, k, "path")
        return cls(graph_class, k, width_threshold(graph_class, k + 1), budget)


def make_path_session(c: GraphClass, k: int,
                      config: SolverConfig | None = None,
                      on_query=None) -> OracleSession:
    budget_vertices, budget_param = default_query_budget(c, k, "path")
    return OracleSession(budget_vertices, budget_param, config=config, on_query=on_query)


def _edge_set_vertices(edge_set, fallback: frozenset[int]) -> frozenset[int]:
    if edge_set is None:
        return fallback
    out: set[int] = set()
    for u, v in edge_set:
        out.add(u)
        out.add(v)
    return frozenset(out) if out else fallback


def compute_witnesses(session: OracleSession, g: Graph, side_a, x: int, y: int) -> WitnessSet:
    """Six maximum witnesses inside G[A], via the stable-property engine.

    Empty edge sets decode to the trivial structures: a single terminal for
    the one-ended paths, nothing for the xy-path, both terminals for the
    disjoint pair.
    """
    if x == y:
        raise GraphError("witness terminals must be distinct")
    ga = g.induced(side_a)
    no_y = ga.without_vertices([y])
    no_x = ga.without_vertices([x])
    p1 = _edge_set_vertices(
        selfreduce_max_stable_set(session, no_y, x, x, X_PATH, purpose="reduce-p:p1"),
        frozenset({x}))
    p2 = _edge_set_vertices(
        selfreduce_max_stable_set(session, no_x, y, y, X_PATH, purpose="reduce-p:p2"),
        frozenset({y}))
    p3 = _edge_set_vertices(
        selfreduce_max_stable_set(session, ga, x, x, X_PATH, purpose="reduce-p:p3"),
        frozenset({x}))
    p4 = _edge_set_vertices(
        selfreduce_max_stable_set(session, ga, y, y, X_PATH, purpose="reduce-p:p4"),
        frozenset({y}))
    p5 = _edge_set_vertices(
        selfreduce_max_stable_set(session, ga, x, y, XY_PATH, purpose="reduce-p:p5"),
        frozenset())
    p6 = _edge_set_vertices(
        selfreduce_max_stable_set(session, ga, x, y, TWO_DISJOINT_END_PATHS,
                                  purpose="reduce-p:p6"),
        frozenset({x, y}))
    return WitnessSet(p1, p2, p3, p4, p5, p6)


def reduce_p(work: WorkingDecomposition, sep: Separation, k: int,
             session: OracleSession) -> Reported | None:
    """One reduction step on a separation of order 1 or 2.

    Reports a long path found on the A-side, or shrinks the A-side to the
    witness structures: at most 7k+2 vertices and 12 components past the
    separator for order 2, at most k+1 vertices and one component for
    order 1.
    """
    if sep.order not in (1, 2):
        raise GraphError("path reduction needs a separation of order 1 or 2")
    ga = work.graph.induced(sep.side_a)
    if session.query("path", ga, k, "reduce-p:a-side"):
        return Reported(YES_ORACLE_A_SIDE, ga)
    if sep.order == 2:
        x, y = sorted(sep.separator)
        witnesses = compute_witnesses(session, work.graph, sep.side_a, x, y)
        keep = set(witnesses.union()) | {x, y}
        max_keep, max_components = 7 * k + 2, 12
    else:
        (x,) = sep.separator
        y = None
        edge_set = selfreduce_max_stable_set(session, ga, x, x, X_PATH,
                                             purpose="reduce-p:xpath")
        keep = set(_edge_set_vertices(edge_set, frozenset({x})))
        max_keep, max_components = k + 1, 1
    work.delete_vertices(sep.side_a - keep)
    assert len(keep) <= max_keep, "witness retention bound violated"
    remaining = (sep.side_a & work.graph.vertex_set()) - sep.separator
    assert _component_count(work.graph, remaining) <= max_components, \
        "component-count postcondition violated"
    return None


def _component_count(g: Graph, vertices: set[int]) -> int:
    left = set(vertices)
    count = 0
    while left:
        start = min(left)
        stack = [start]
        left.discard(start)
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u in left:
                    left.discard(u)
                    stack.append(u)
        count += 1
    return count


def kernelize_path_node(g: Graph, work: WorkingDecomposition, i: int, k: int,
                        session: OracleSession) -> Reported | None:
    """Bottom-up reduction of the subtree rooted at i: shrink each child
    subtree, then merge same-cut-vertex children pairwise and same-pair
    children in batches of 13."""
    for j in list(work.children(i)):
        if not work.alive(j):
            continue
        rep = kernelize_path_node(g, work, j, k, session)
        if rep is not None:
            return rep
        if not work.alive(j):
            continue
        adhesion = work.bag(i) & work.bag(j)
        assert 1 <= len(adhesion) <= 2, \
            "connected components force adhesions of size 1 or 2"
        side_a = work.subtree_bag_union(j)
        side_b = (work.graph.vertex_set() - side_a) | adhesion
        rep = reduce_p(work, Separation(frozenset(side_a), frozenset(side_b)), k, session)
        if rep is not None:
            return rep

    for x in sorted(work.bag(i)):
        guard = work.subtree_size() + 1
        while True:
            cut_children = [j for j in work.children(i)
                            if work.bag(i) & work.bag(j) == {x}]
            if len(cut_children) < 2:
                break
            j1, j2 = cut_children[0], cut_children[1]
            side_a = work.subtree_bag_union(j1) | work.subtree_bag_union(j2)
            side_b = (work.graph.vertex_set() - side_a) | {x}
            rep = reduce_p(work, Separation(frozenset(side_a), frozenset(side_b)),
                           k, session)
            if rep is not None:
                return rep
            assert not (work.alive(j1) and work.alive(j2)), \
                "cut-vertex merge must absorb one child subtree"
            guard -= 1
            assert guard > 0

    for x, y in combinations(sorted(work.bag(i)), 2):
        guard = work.subtree_size() + 1
        while True:
            pair_children = [j for j in work.children(i)
                             if work.bag(i) & work.bag(j) == {x, y}]
            if len(pair_children) < 13:
                break
            batch = pair_children[:13]
            side_a: set[int] = set()
            for j in batch:
                side_a |= work.subtree_bag_union(j)
            side_b = (work.graph.vertex_set() - side_a) | {x, y}
            rep = reduce_p(work, Separation(frozenset(side_a), frozenset(side_b)),
                           k, session)
            if rep is not None:
                return rep
            assert any(not work.alive(j) for j in batch), \
                "batch merge must absorb one child subtree"
            guard -= 1
            assert guard > 0

    subtree_total = len(work.subtree_bag_union(i))
    torso_edges = torso(g, work.bag(i)).m
    bag_size = len(work.bag(i))
    assert subtree_total <= (7 * k + 2) * (12 * torso_edges + bag_size) + bag_size, \
        "per-node size bound violated"
    return None


def turing_kernel_path(g: Graph, c: GraphClass, k: int,
                       session: OracleSession | None = None,
                       config: SolverConfig | None = None) -> KernelResult:
    """Decide whether g has a simple path with >= k edges."""
    t0 = time.perf_counter()
    if session is None:
        session = make_path_session(c, max(k, 2), config=config)

    # degenerate parameters decided by inspection
    if k <= 1:
        answer = g.n > 0 if k <= 0 else g.m > 0
        return KernelResult(answer=answer, problem="path", graph_class=c, k=k,
                            n=g.n, m=g.m, width_threshold=0, max_bag=0,
                            yes_reason=YES_TRIVIAL if answer else None,
                            session=session,
                            wall_ms=(time.perf_counter() - t0) * 1000,
                            context=YesContext(YES_TRIVIAL) if answer else None)

    thresh = width_threshold(c, k + 1)
    max_bag = 0
    answer = False
    reason: str | None = None
    context: YesContext | None = None

    for comp in g.connected_components():
        piece = g.induced(comp)
        tdec = tutte_decompose(piece)
        max_bag = max(max_bag, tdec.max_bag_size())
        wide = [i for i in tdec.base.nodes() if len(tdec.base.bags[i]) >= thresh]
        if wide:
            answer, reason = True, YES_WIDTH
            context = YesContext(YES_WIDTH, piece=piece, tutte=tdec, wide_node=wide[0])
            break
        work = WorkingDecomposition(piece, tdec.base)
        rep = kernelize_path_node(piece, work, work.root, k, session)
        if rep is not None:
            answer, reason = True, rep.reason
            context = YesContext(rep.reason, subgraph=rep.subgraph, x=rep.x, y=rep.y)
            break
        if session.query("path", work.graph, k, "final"):
            answer, reason = True, YES_FINAL_QUERY
            context = YesContext(YES_FINAL_QUERY, subgraph=work.graph.copy())
            break

    wall_ms = (time.perf_counter() - t0) * 1000
    return KernelResult(answer=answer, problem="path", graph_class=c, k=k,
                        n=g.n, m=g.m, width_threshold=thresh, max_bag=max_bag,
                        yes_reason=reason, session=session, wall_ms=wall_ms,
                        context=context)
