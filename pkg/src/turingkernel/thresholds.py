"""Width thresholds: bag sizes that force a long cycle in a triconnected torso.

Each graph class carries a lower bound on the circumference of its
triconnected members; the threshold inverts that bound at the target length.
High-precision arithmetic avoids float boundary errors at exact powers.
"""

from __future__ import annotations

import os

import mpmath

from .graph import GraphClass, GraphError

mpmath.mp.dps = 60

DEFAULT_BUDGET_POLY_C = 100


def circumference_lower_bound(c: GraphClass, n: int) -> float:
    """Guaranteed circumference of a triconnected member of c on n >= 3 vertices."""
    if n < 3:
        raise GraphError("circumference bounds need at least 3 vertices")
    nn = mpmath.mpf(n)
    if c.kind == "planar":
        return float(nn ** (mpmath.log(2) / mpmath.log(3)))
    if c.kind == "k3t-minor-free":
        assert c.t is not None
        return float(mpmath.mpf(0.5) ** (c.t * (c.t - 1)) * nn ** (mpmath.log(2) / mpmath.log(1729)))
    if c.kind == "claw-free":
        return float((nn / 12) ** mpmath.mpf("0.753") + 2)
    if c.kind == "max-degree":
        assert c.t is not None
        r = max(64, 4 * c.t + 1)
        return float(nn ** (mpmath.log(2) / mpmath.log(r)) / 2 + 3)
    raise AssertionError(f"unhandled class kind {c.kind}")


def width_threshold(c: GraphClass, k: int) -> int:
    """Smallest T with circumference_lower_bound(c, T) >= k, never below 3.

    The bounds only apply to triconnected graphs on >= 3 vertices, and any
    such graph has a triangle-length cycle, hence the floor of 3.
    """
    if k < 3:
        raise GraphError("thresholds are defined for k >= 3")
    kk = mpmath.mpf(k)
    if c.kind == "planar":
        raw = kk ** (mpmath.log(3) / mpmath.log(2))
    elif c.kind == "k3t-minor-free":
        assert c.t is not None
        raw = (mpmath.mpf(2) ** (c.t * (c.t - 1)) * kk) ** (mpmath.log(1729) / mpmath.log(2))
    elif c.kind == "claw-free":
        raw = 12 * (kk - 2) ** (1 / mpmath.mpf("0.753"))
    elif c.kind == "max-degree":
        assert c.t is not None
        r = max(64, 4 * c.t + 1)
        raw = (2 * (kk - 3)) ** (mpmath.log(r) / mpmath.log(2))
    else:
        raise AssertionError(f"unhandled class kind {c.kind}")
    t = max(int(mpmath.ceil(raw)), 3)
    # settle boundary cases exactly: t must be smallest with bound(t) >= k
    while t > 3 and circumference_lower_bound(c, t - 1) >= k:
        t -= 1
    while circumference_lower_bound(c, t) < k:
        t += 1
    return t


def planar_cycle_query_budget(k: int) -> int:
    """Closed-form order bound for planar long-cycle queries: (3k+1)k^(log2 3)+k."""
    kk = mpmath.mpf(k)
    bound = (3 * k + 1) * kk ** (mpmath.log(3) / mpmath.log(2)) + k
    return int(mpmath.floor(bound))


def poly_budget_c() -> int:
    raw = os.environ.get("TK_BUDGET_POLY_C")
    if raw is None or not raw.strip():
        return DEFAULT_BUDGET_POLY_C
    return int(raw)


def default_query_budget(c: GraphClass, k: int, problem: str) -> tuple[int, int]:
    """(budget_vertices, budget_param) for a kernel session.

    Long-cycle sessions always query with parameter exactly k. For the
    planar cycle kernel the vertex budget is the closed-form bound; every
    other combination uses the documented engineering default of C*k^4
    vertices (C from TK_BUDGET_POLY_C), with edge-count-valued parameters
    for path sessions bounded by the densest possible query.
    """
    k = max(k, 3)
    if problem == "cycle":
        if c.kind == "planar":
            return planar_cycle_query_budget(k), k
        return poly_budget_c() * k ** 4, k
    if problem == "path":
        bv = poly_budget_c() * (k + 1) ** 4
        return bv, bv * (bv - 1) // 2
    raise GraphError(f"unknown problem {problem!r}")
