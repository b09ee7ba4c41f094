"""Randomized cross-validation harness: generated instances, kernel versus
exact answers, query-size accounting, optional certificate checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .construct import certificate_is_valid, construct_cycle, construct_path
from .dimacs import format_graph
from .generators import FAMILY_CLASS, gen_instance
from .graph import Graph
from .kernel_cycle import make_cycle_session, turing_kernel_cycle
from .kernel_path import make_path_session, turing_kernel_path
from .oracle import SolverConfig, exact_k_cycle, exact_k_path


@dataclass(frozen=True)
class MatrixSpec:
    problem: str                       # "path" or "cycle"
    families: tuple[str, ...]
    ks: tuple[int, ...]
    reps: int
    n_min: int = 8
    n_max: int = 100
    with_certificates: bool = False


@dataclass
class CellResult:
    family: str
    k: int
    instances: int = 0
    agreements: int = 0
    yes_count: int = 0
    max_query_n: int = 0
    budget: int = 0
    budget_violations: int = 0

    @property
    def ok(self) -> bool:
        return self.agreements == self.instances and self.budget_violations == 0


@dataclass
class Failure:
    family: str
    k: int
    seed: int
    kernel_answer: bool
    exact_answer: bool
    graph_text: str
    query_log: list


@dataclass
class CrossValidationResult:
    cells: list[CellResult] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and all(c.ok for c in self.cells)

    def table(self) -> str:
        lines = ["family                          k  inst  agree  yes  max_q  budget"]
        for c in self.cells:
            lines.append(f"{c.family:<30} {c.k:>2} {c.instances:>5} {c.agreements:>6} "
                         f"{c.yes_count:>4} {c.max_query_n:>6} {c.budget:>7}")
        if not self.cells:
            lines.append("(empty matrix)")
        return "\n".join(lines) + "\n"


def cross_validate(spec: MatrixSpec, seed: int,
                   config: SolverConfig | None = None) -> CrossValidationResult:
    """Run the matrix; any kernel/exact disagreement or budget violation is a
    failure, and carries a reproducible dump of the offending instance."""
    result = CrossValidationResult()
    rng = random.Random(seed)
    for family in spec.families:
        for k in spec.ks:
            cell = CellResult(family=family, k=k)
            for _ in range(spec.reps):
                inst_seed = rng.randrange(1 << 30)
                n = rng.randint(spec.n_min, spec.n_max)
                g, cls = gen_instance(family, n, inst_seed, plant_k=k)
                if spec.problem == "cycle":
                    session = make_cycle_session(cls, k, config=config)
                    res = turing_kernel_cycle(g, cls, k, session=session, config=config)
                    exact = exact_k_cycle(g, k, config)
                else:
                    session = make_path_session(cls, k, config=config)
                    res = turing_kernel_path(g, cls, k, session=session, config=config)
                    exact = exact_k_path(g, k, config)
                cell.instances += 1
                cell.budget = session.budget_vertices
                cell.max_query_n = max(cell.max_query_n, session.max_query_order())
                if session.max_query_order() > session.budget_vertices:
                    cell.budget_violations += 1
                if res.answer == exact:
                    cell.agreements += 1
                else:
                    result.failures.append(Failure(
                        family=family, k=k, seed=inst_seed,
                        kernel_answer=res.answer, exact_answer=exact,
                        graph_text=format_graph(g),
                        query_log=[r.to_dict() for r in session.log]))
                if exact:
                    cell.yes_count += 1
                if spec.with_certificates:
                    if spec.problem == "cycle":
                        cert = construct_cycle(g, cls, k, config=config)
                    else:
                        cert = construct_path(g, cls, k, config=config)
                    cert_ok = certificate_is_valid(g, cert, k) if exact else cert.kind == "none"
                    if not cert_ok:
                        result.failures.append(Failure(
                            family=family, k=k, seed=inst_seed,
                            kernel_answer=res.answer, exact_answer=exact,
                            graph_text=format_graph(g),
                            query_log=[{"certificate": cert.kind,
                                        "sequence": list(cert.vertex_sequence)}]))
            result.cells.append(cell)
    return result
