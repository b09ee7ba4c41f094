"""Graph-class validation: exact checks where cheap, declaration otherwise."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphClass
from .planarity import planarity_test

CERTIFIED = "certified"
DECLARED_ONLY = "declared-only"
VIOLATED = "violated"


@dataclass(frozen=True)
class ValidationReport:
    status: str
    witness: tuple | None = None
    detail: str = ""


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced K_{1,3} as (center, leaf, leaf, leaf), or None."""
    for v in g.vertices():
        nbrs = g.neighbors(v)
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return (v, a, b, c)
    return None


def validate_class(g: Graph, c: GraphClass) -> ValidationReport:
    """Certify membership where the check is affordable.

    Max degree and claw-freeness are checked exactly, planarity runs the
    full embedding test, and K3t-minor-freeness is taken on trust.
    """
    if c.kind == "max-degree":
        assert c.t is not None
        for v in g.vertices():
            if g.degree(v) > c.t:
                return ValidationReport(VIOLATED, witness=(v,),
                                        detail=f"vertex {v} has degree {g.degree(v)} > {c.t}")
        return ValidationReport(CERTIFIED)
    if c.kind == "claw-free":
        claw = find_claw(g)
        if claw is not None:
            return ValidationReport(VIOLATED, witness=claw,
                                    detail=f"induced claw centered at {claw[0]}")
        return ValidationReport(CERTIFIED)
    if c.kind == "planar":
        report = planarity_test(g)
        if report.planar:
            return ValidationReport(CERTIFIED)
        return ValidationReport(VIOLATED, witness=report.witness_edges,
                                detail="contains a forbidden-subdivision witness")
    if c.kind == "k3t-minor-free":
        return ValidationReport(DECLARED_ONLY,
                                detail="minor-freeness is declared, never certified")
    raise AssertionError(f"unhandled class kind {c.kind}")
