"""Shared result/report types for the two kernelization pipelines."""

from __future__ import annotations

from dataclasses import dataclass

from .decompose import TutteDec
from .graph import Graph, GraphClass
from .oracle import OracleSession

YES_WIDTH = "width"
YES_ORACLE_A_SIDE = "oracle-A-side"
YES_LONG_XY_PATH = "long-xy-path"
YES_FINAL_QUERY = "final-query"
YES_TRIVIAL = "trivial"  # degenerate parameters decided before the pipeline


@dataclass
class YesContext:
    """Where the yes answer came from, kept for certificate construction."""

    kind: str
    subgraph: Graph | None = None     # A-side or final reduced graph (copy)
    x: int | None = None
    y: int | None = None
    piece: Graph | None = None        # block/component that fired the width exit
    tutte: TutteDec | None = None
    wide_node: int | None = None


@dataclass(frozen=True)
class Reported:
    """A reduction step certified a long structure and halted the pipeline."""

    reason: str
    subgraph: Graph
    x: int | None = None
    y: int | None = None


@dataclass
class KernelResult:
    answer: bool
    problem: str
    graph_class: GraphClass
    k: int
    n: int
    m: int
    width_threshold: int
    max_bag: int
    yes_reason: str | None
    session: OracleSession
    wall_ms: float
    context: YesContext | None = None

    def report_dict(self, deterministic: bool = True) -> dict:
        return {
            "answer": "yes" if self.answer else "no",
            "class": str(self.graph_class),
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "width_threshold": self.width_threshold,
            "max_bag": self.max_bag,
            "num_queries": self.session.num_queries,
            "max_query_n": self.session.max_query_order(),
            "bound_max_query_n": self.session.budget_vertices,
            "yes_reason": self.yes_reason,
            "wall_ms": 0 if deterministic else round(self.wall_ms, 3),
        }

    def report_text(self) -> str:
        lines = [f"{key}: {val}" for key, val in self.report_dict(deterministic=False).items()]
        lines.append(f"problem: {self.problem}")
        return "\n".join(lines) + "\n"
