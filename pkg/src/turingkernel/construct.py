"""Upgrade yes/no answers to explicit certificates: an actual long path or
cycle, or a definitive "none exists".

For edge-deletion-closed classes (planar, K3t-minor-free) the certificate
comes from an edge-deletion sweep that re-runs the decision pipeline after
each tentative removal; each decision is preceded by a sound linear-time
yes-detector so the sweep stays fast on dense graphs. For the other two
classes the yes-certifying subinstance is pruned directly, except for
width-exit answers, which fall back to a direct exact search on the
oversized torso (flagged in the certificate note; correctness preserved,
the polynomial query bound is not)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphClass, GraphError
from .kernel_common import YES_LONG_XY_PATH, YES_WIDTH
from .kernel_cycle import turing_kernel_cycle
from .kernel_path import turing_kernel_path
from .oracle import (XY_PATH, OracleSession, SolverConfig,
                     _backedge_long_cycle, _local_adj, _tree_deep_path,
                     find_cycle_atleast, find_path_atleast,
                     selfreduce_max_stable_set)

PATH_CERT = "path"
CYCLE_CERT = "cycle"
NO_CERT = "none"

# classes whose answer survives the full-graph edge-deletion sweep
_SWEEP_CLASSES = ("planar", "k3t-minor-free")


@dataclass(frozen=True)
class Certificate:
    kind: str
    vertex_sequence: tuple[int, ...] = ()
    note: str = ""

    @property
    def length(self) -> int:
        if self.kind == PATH_CERT:
            return len(self.vertex_sequence) - 1
        if self.kind == CYCLE_CERT:
            return len(self.vertex_sequence)
        return 0


def certificate_is_valid(g: Graph, cert: Certificate, k: int) -> bool:
    seq = cert.vertex_sequence
    if cert.kind == NO_CERT:
        return False
    if len(set(seq)) != len(seq):
        return False
    if not all(g.has_vertex(v) for v in seq):
        return False
    for u, v in zip(seq, seq[1:]):
        if not g.has_edge(u, v):
            return False
    if cert.kind == PATH_CERT:
        return len(seq) - 1 >= k
    if cert.kind == CYCLE_CERT:
        return len(seq) >= max(k, 3) and g.has_edge(seq[-1], seq[0])
    return False


# ---------------------------------------------------------------------------
# decoding pruned edge sets
# ---------------------------------------------------------------------------

def _decode_path_graph(h: Graph) -> list[int]:
    """h's edges must form exactly one simple path; returns its sequence."""
    live = [v for v in h.vertices() if h.degree(v) > 0]
    ends = [v for v in live if h.degree(v) == 1]
    if len(ends) != 2 or any(h.degree(v) > 2 for v in live):
        raise GraphError("pruned graph is not a single path")
    seq = [min(ends)]
    prev = None
    while True:
        nxt = [u for u in h.neighbors(seq[-1]) if u != prev]
        if not nxt:
            break
        prev = seq[-1]
        seq.append(nxt[0])
    if len(seq) != len(live):
        raise GraphError("pruned graph is not connected")
    return seq


def _decode_cycle_graph(h: Graph) -> list[int]:
    """h's edges must form exactly one cycle; returns its sequence."""
    live = [v for v in h.vertices() if h.degree(v) > 0]
    if any(h.degree(v) != 2 for v in live):
        raise GraphError("pruned graph is not a single cycle")
    start = min(live)
    seq = [start]
    prev = None
    while True:
        nbrs = [u for u in h.neighbors(seq[-1]) if u != prev]
        nxt = min(nbrs)
        if nxt == start:
            break
        prev = seq[-1]
        seq.append(nxt)
    if len(seq) != len(live):
        raise GraphError("pruned graph has more than one cycle component")
    return seq


def _decode_edge_set_path(edge_set) -> list[int]:
    h = Graph(edges=sorted(edge_set))
    return _decode_path_graph(h)


# ---------------------------------------------------------------------------
# fast sound yes-detectors (no oracle use)
# ---------------------------------------------------------------------------

def _fast_yes_path(g: Graph, k: int) -> bool:
    if k <= 0:
        return g.n > 0
    for comp in g.connected_components():
        if len(comp) < k + 1:
            continue
        adj, _ = _local_adj(g, comp)
        if _tree_deep_path(adj, k) is not None:
            return True
    return False


def _fast_yes_cycle(g: Graph, k: int) -> bool:
    comp_lists = g.connected_components()
    for comp in comp_lists:
        if len(comp) < k:
            continue
        adj, _ = _local_adj(g, comp)
        if _backedge_long_cycle(adj, k) is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# pruning sweeps
# ---------------------------------------------------------------------------

def _prune_with(g: Graph, decide) -> Graph:
    """Edge-deletion sweep in increasing (min, max) order; keeps the target
    structure alive, ends with exactly its edges."""
    h = g.copy()
    for u, v in g.edges():
        trial = h.without_edge(u, v)
        if decide(trial):
            h = trial
    return h


def _strip_isolated(g: Graph) -> Graph:
    return g.without_vertices([v for v in g.vertices() if g.degree(v) == 0])


def _kernel_decide_path(c: GraphClass, k: int, session: OracleSession,
                        config: SolverConfig | None):
    def decide(trial: Graph) -> bool:
        if _fast_yes_path(trial, k):
            return True
        return turing_kernel_path(_strip_isolated(trial), c, k,
                                  session=session, config=config).answer
    return decide


def _kernel_decide_cycle(c: GraphClass, k: int, session: OracleSession,
                         config: SolverConfig | None):
    def decide(trial: Graph) -> bool:
        if _fast_yes_cycle(trial, k):
            return True
        return turing_kernel_cycle(_strip_isolated(trial), c, k,
                                   session=session, config=config).answer
    return decide


def _oracle_decide(problem: str, k: int, session: OracleSession):
    def decide(trial: Graph) -> bool:
        return session.query(problem, _strip_isolated(trial), k, "construct:prune")
    return decide


# ---------------------------------------------------------------------------
# torso fallback for width-exit answers in non-deletion-closed classes
# ---------------------------------------------------------------------------

def _expand_torso_walk(piece: Graph, bag: set[int], walk: list[int],
                       closing: bool) -> list[int]:
    """Replace torso shortcut edges on the walk by paths through the
    components of piece - bag. Adhesion <= 2 pairs each component with a
    unique vertex pair, so expansions stay vertex-disjoint."""
    comps: list[tuple[set[int], set[int]]] = []
    outside = piece.vertex_set() - bag
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
            for u in piece.neighbors(w):
                if u in bag:
                    attach.add(u)
                elif u not in seen:
                    seen.add(u)
                    comp.add(u)
                    queue.append(u)
        comps.append((comp, attach))

    def bridge(u: int, v: int) -> list[int]:
        for comp, attach in comps:
            if u in attach and v in attach:
                prev = {w: u for w in piece.neighbors(u) if w in comp}
                queue = deque(sorted(prev))
                while queue:
                    w = queue.popleft()
                    if piece.has_edge(w, v):
                        chain = [w]
                        while chain[-1] != u:
                            chain.append(prev[chain[-1]])
                        chain.reverse()
                        return chain
                    for z in piece.neighbors(w):
                        if z in comp and z not in prev:
                            prev[z] = w
                            queue.append(z)
        raise GraphError(f"no expansion for shortcut edge {{{u},{v}}}")

    out: list[int] = [walk[0]]
    hops = list(zip(walk, walk[1:]))
    if closing:
        hops.append((walk[-1], walk[0]))
    for idx, (u, v) in enumerate(hops):
        if not piece.has_edge(u, v):
            out.extend(bridge(u, v))
        if not (closing and idx == len(hops) - 1):
            out.append(v)  # the closing hop's far end is already out[0]
    return out


def _torso_fallback(context, problem: str, k: int,
                    config: SolverConfig | None) -> Certificate:
    assert context.tutte is not None and context.wide_node is not None
    piece = context.piece
    bag = context.tutte.base.bags[context.wide_node]
    torso_graph = context.tutte.torso_of(context.wide_node)
    generous = SolverConfig(time_limit_ms=None)
    if problem == "path":
        walk = find_path_atleast(torso_graph, k, generous)
        assert walk is not None, "width exit guarantees a long structure"
        expanded = _expand_torso_walk(piece, bag, walk, closing=False)
        return Certificate(PATH_CERT, tuple(expanded), note="torso-direct-search")
    walk = find_cycle_atleast(torso_graph, k, generous)
    assert walk is not None, "width exit guarantees a long structure"
    expanded = _expand_torso_walk(piece, bag, walk, closing=True)
    return Certificate(CYCLE_CERT, tuple(expanded), note="torso-direct-search")


# ---------------------------------------------------------------------------
# completing an xy-path into a cycle across a minimal separator
# ---------------------------------------------------------------------------

def _spanning_xy_path(g: Graph, x: int, y: int, vertices: set[int]) -> list[int] | None:
    """An xy-path visiting exactly `vertices`, by backtracking search."""
    sub = g.induced(vertices)
    target = len(vertices)
    seq = [x]
    used = {x}

    def go() -> bool:
        v = seq[-1]
        if v == y:
            return len(seq) == target
        for u in sub.neighbors(v):
            if u not in used and (u != y or len(seq) + 1 == target):
                used.add(u)
                seq.append(u)
                if go():
                    return True
                used.discard(u)
                seq.pop()
        return False

    if x == y or x not in vertices or y not in vertices:
        return None
    return seq if go() else None


def _complete_sequence_to_cycle(g: Graph, seq: list[int]) -> Certificate:
    """Close an xy-path into a cycle: direct edge if present, else a path
    through a component of g - {x, y} away from the path interior."""
    x, y = seq[0], seq[-1]
    if g.has_edge(x, y):
        return Certificate(CYCLE_CERT, tuple(seq))
    interior = set(seq[1:-1])
    for comp_list in g.without_vertices([x, y]).connected_components():
        comp = set(comp_list)
        if comp & interior:
            continue
        x_doors = [v for v in comp_list if g.has_edge(x, v)]
        if not x_doors or not any(g.has_edge(y, v) for v in comp):
            continue
        prev = {v: -1 for v in x_doors}
        queue = deque(sorted(x_doors))
        while queue:
            w = queue.popleft()
            if g.has_edge(w, y):
                # walk y -> w -> ... -> door, the door closes back to x
                chain = [w]
                while prev[chain[-1]] != -1:
                    chain.append(prev[chain[-1]])
                return Certificate(CYCLE_CERT, tuple(seq + chain))
            for z in g.neighbors(w):
                if z in comp and z not in prev:
                    prev[z] = w
                    queue.append(z)
    raise GraphError("completion requires a second linked component")


def complete_xy_path_to_cycle(g: Graph, x: int, y: int, path_vertices) -> Certificate:
    """Close a >= 2-edge xy-path (given by its vertex set) into a cycle,
    using the separator structure of {x, y}."""
    vertices = set(path_vertices)
    if len(vertices) < 3:
        raise GraphError("the path must have length at least 2")
    seq = _spanning_xy_path(g, x, y, vertices)
    if seq is None:
        raise GraphError("the vertex set does not span an xy-path")
    return _complete_sequence_to_cycle(g, seq)


# ---------------------------------------------------------------------------
# public construction entry points
# ---------------------------------------------------------------------------

def construct_path(g: Graph, c: GraphClass, k: int,
                   session: OracleSession | None = None,
                   config: SolverConfig | None = None) -> Certificate:
    """An explicit path with >= k edges, or a definitive none."""
    if k <= 0:
        verts = g.vertices()
        return Certificate(PATH_CERT, (verts[0],)) if verts else Certificate(NO_CERT)
    if k == 1:
        edges = g.edges()
        return Certificate(PATH_CERT, edges[0]) if edges else Certificate(NO_CERT)

    result = turing_kernel_path(g, c, k, session=session, config=config)
    session = result.session
    if not result.answer:
        return Certificate(NO_CERT)

    if c.kind in _SWEEP_CLASSES:
        pruned = _prune_with(g, _kernel_decide_path(c, k, session, config))
        return Certificate(PATH_CERT, tuple(_decode_path_graph(pruned)))

    context = result.context
    assert context is not None
    if context.kind == YES_WIDTH:
        return _torso_fallback(context, "path", k, config)
    assert context.subgraph is not None
    pruned = _prune_with(context.subgraph, _oracle_decide("path", k, session))
    return Certificate(PATH_CERT, tuple(_decode_path_graph(pruned)))


def construct_cycle(g: Graph, c: GraphClass, k: int,
                    session: OracleSession | None = None,
                    config: SolverConfig | None = None) -> Certificate:
    """An explicit cycle with >= k edges, or a definitive none."""
    k = max(k, 3)
    result = turing_kernel_cycle(g, c, k, session=session, config=config)
    session = result.session
    if not result.answer:
        return Certificate(NO_CERT)

    if c.kind in _SWEEP_CLASSES:
        pruned = _prune_with(g, _kernel_decide_cycle(c, k, session, config))
        return Certificate(CYCLE_CERT, tuple(_decode_cycle_graph(pruned)))

    context = result.context
    assert context is not None
    if context.kind == YES_WIDTH:
        return _torso_fallback(context, "cycle", k, config)
    if context.kind == YES_LONG_XY_PATH:
        assert context.subgraph is not None
        edge_set = selfreduce_max_stable_set(session, context.subgraph,
                                             context.x, context.y, XY_PATH,
                                             purpose="construct:xy-path")
        assert edge_set is not None
        seq = _decode_edge_set_path(edge_set)
        if seq[0] != context.x:
            seq.reverse()
        return _complete_sequence_to_cycle(g, seq)
    assert context.subgraph is not None
    pruned = _prune_with(context.subgraph, _oracle_decide("cycle", k, session))
    return Certificate(CYCLE_CERT, tuple(_decode_cycle_graph(pruned)))
