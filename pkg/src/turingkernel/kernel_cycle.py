"""Long-cycle kernelization: shrink each biconnected block along its
adhesion-2 decomposition, querying the oracle only about bounded pieces.

A block either certifies a long cycle through an oversized triconnected
torso, through an oracle hit on one side of a separation, or through a long
path between the two vertices of a minimal separator; otherwise the block
shrinks until a single bounded final query decides it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .decompose import (WorkingDecomposition, biconnected_components, torso,
                        tutte_decompose)
from .graph import Graph, GraphClass, GraphError, Separation
from .kernel_common import (KernelResult, Reported, YesContext,
                            YES_FINAL_QUERY, YES_LONG_XY_PATH,
                            YES_ORACLE_A_SIDE, YES_WIDTH)
from .oracle import (K_CYCLE_FOUND, LONG_XY_PATH, OracleSession, SolverConfig,
                     selfreduce_longest_xy_path)
from .thresholds import default_query_budget, width_threshold


@dataclass(frozen=True)
class CycleKernelConfig:
    graph_class: GraphClass
    k: int
    width_threshold: int
    query_budget: int

    @classmethod
    def for_instance(cls, graph_class: GraphClass, k: int) -> "CycleKernelConfig":
        k = max(k, 3)
        budget, _ = default_query_budget(graph_class, k, "cycle")
        return cls(graph_class, k, width_threshold(graph_class, k), budget)


def make_cycle_session(c: GraphClass, k: int,
                       config: SolverConfig | None = None,
                       on_query=None) -> OracleSession:
    budget_vertices, budget_param = default_query_budget(c, max(k, 3), "cycle")
    return OracleSession(budget_vertices, budget_param, config=config, on_query=on_query)


def reduce_c(g: Graph, work: WorkingDecomposition, sep: Separation, k: int,
             session: OracleSession) -> Reported | None:
    """One reduction step on an order-2 separation of the working graph.

    Either reports a long cycle (oracle hit on the A-side, or a long path
    between the separator vertices, which closes into a cycle through the
    other side of the minimal separator), or deletes every A-side vertex
    outside a maximum-length path between the separator vertices.
    """
    if sep.order != 2:
        raise GraphError("cycle reduction needs an order-2 separation")
    x, y = sorted(sep.separator)
    ga = work.graph.induced(sep.side_a)
    if session.query("cycle", ga, k, "reduce-c:a-side"):
        return Reported(YES_ORACLE_A_SIDE, ga, x, y)
    outcome = selfreduce_longest_xy_path(session, ga, k, x, y, purpose="reduce-c")
    if outcome.variant == K_CYCLE_FOUND:
        return Reported(YES_ORACLE_A_SIDE, ga, x, y)
    if outcome.variant == LONG_XY_PATH:
        return Reported(YES_LONG_XY_PATH, ga, x, y)
    assert outcome.vertices is not None
    keep = outcome.vertices | {x, y}
    work.delete_vertices(sep.side_a - keep)
    # the only surviving A-side component is the interior of the kept path
    remaining = (sep.side_a & work.graph.vertex_set()) - {x, y}
    assert _component_count(work.graph, remaining) <= 1, \
        "A-side must shrink to at most one component"
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


def kernelize_cycle_node(g: Graph, work: WorkingDecomposition, i: int, k: int,
                         session: OracleSession) -> Reported | None:
    """Bottom-up reduction of the subtree rooted at node i."""
    for j in list(work.children(i)):
        if not work.alive(j):
            continue
        rep = kernelize_cycle_node(g, work, j, k, session)
        if rep is not None:
            return rep
        if not work.alive(j):
            continue
        adhesion = work.bag(i) & work.bag(j)
        assert len(adhesion) == 2, "biconnected input forces adhesions of size 2"
        x, y = sorted(adhesion)
        side_a = work.subtree_bag_union(j)
        side_b = (work.graph.vertex_set() - side_a) | {x, y}
        rep = reduce_c(g, work, Separation(frozenset(side_a), frozenset(side_b)), k, session)
        if rep is not None:
            return rep

    for x, y in combinations(sorted(work.bag(i)), 2):
        guard = work.subtree_size() + 1
        while True:
            pair_children = [j for j in work.children(i)
                             if work.bag(i) & work.bag(j) == {x, y}]
            if len(pair_children) < 2:
                break
            j1, j2 = pair_children[0], pair_children[1]
            side_a = work.subtree_bag_union(j1) | work.subtree_bag_union(j2)
            side_b = (work.graph.vertex_set() - side_a) | {x, y}
            rep = reduce_c(g, work, Separation(frozenset(side_a), frozenset(side_b)),
                           k, session)
            if rep is not None:
                return rep
            assert not (work.alive(j1) and work.alive(j2)), \
                "each merge step must absorb one child subtree"
            guard -= 1
            assert guard > 0, "merge loop exceeded the tree size"

    subtree_total = len(work.subtree_bag_union(i))
    torso_edges = torso(g, work.bag(i)).m
    assert subtree_total <= k * torso_edges + len(work.bag(i)), \
        "per-node size bound violated"
    return None


def turing_kernel_cycle(g: Graph, c: GraphClass, k: int,
                        session: OracleSession | None = None,
                        config: SolverConfig | None = None) -> KernelResult:
    """Decide whether g has a cycle with >= k edges, querying the oracle
    only about instances whose order stays within the session budget."""
    t0 = time.perf_counter()
    k = max(k, 3)
    thresh = width_threshold(c, k)
    if session is None:
        session = make_cycle_session(c, k, config=config)

    blocks, _ = biconnected_components(g)
    max_bag = 0
    answer = False
    reason: str | None = None
    context: YesContext | None = None

    for block in blocks:
        tdec = tutte_decompose(block)
        max_bag = max(max_bag, tdec.max_bag_size())
        wide = [i for i in tdec.base.nodes() if len(tdec.base.bags[i]) >= thresh]
        if wide:
            answer, reason = True, YES_WIDTH
            context = YesContext(YES_WIDTH, piece=block, tutte=tdec, wide_node=wide[0])
            break
        work = WorkingDecomposition(block, tdec.base)
        rep = kernelize_cycle_node(block, work, work.root, k, session)
        if rep is not None:
            answer, reason = True, rep.reason
            context = YesContext(rep.reason, subgraph=rep.subgraph, x=rep.x, y=rep.y)
            break
        if session.query("cycle", work.graph, k, "final"):
            answer, reason = True, YES_FINAL_QUERY
            context = YesContext(YES_FINAL_QUERY, subgraph=work.graph.copy())
            break

    wall_ms = (time.perf_counter() - t0) * 1000
    return KernelResult(answer=answer, problem="cycle", graph_class=c, k=k,
                        n=g.n, m=g.m, width_threshold=thresh, max_bag=max_bag,
                        yes_reason=reason, session=session, wall_ms=wall_ms,
                        context=context)
