"""Command-line front end.

Exit codes: 0 = answer no / success, 1 = answer yes, 2 = usage or parse
error, 3 = budget violation or timeout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classes import validate_class
from .construct import construct_cycle, construct_path
from .decompose import TreeDec, tutte_decompose
from .dimacs import ParseError, format_graph, read_graph
from .generators import FAMILIES, gen_instance
from .graph import Graph, GraphClass, GraphError
from .harness import MatrixSpec, cross_validate
from .kernel_cycle import make_cycle_session, turing_kernel_cycle
from .kernel_path import make_path_session, turing_kernel_path
from .oracle import (BudgetExceeded, OracleSession, OracleTimeout,
                     exact_k_cycle, exact_k_path)
from .setcover import (format_colored_graph, format_setcover, parse_setcover,
                       reduce_setcover_to_multicolored_path, SolvedDirectly)

EXIT_NO = 0
EXIT_YES = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

CLASS_NAMES = ("planar", "max-degree", "claw-free", "k3t-minor-free")


def _graph_class(args) -> GraphClass:
    if args.graph_class in ("max-degree", "k3t-minor-free"):
        if args.t is None:
            raise GraphError(f"class {args.graph_class} needs --t")
        return GraphClass(args.graph_class, args.t)
    return GraphClass(args.graph_class)


def _emit_structured(records, out) -> None:
    out.write(json.dumps({"schema": 1}) + "\n")
    for rec in records:
        out.write(json.dumps(rec, sort_keys=True) + "\n")


def format_decomposition(td: TreeDec, vertex_offset: int = 1) -> str:
    """Line-oriented dump: 'node <id> : <v1> <v2> ...' and 'tedge <i> <j>'."""
    lines = []
    for i in sorted(td.bags):
        verts = " ".join(str(v + vertex_offset) for v in sorted(td.bags[i]))
        lines.append(f"node {i} : {verts}".rstrip())
    for i, j in sorted(tuple(sorted(e)) for e in td.tree_edges):
        lines.append(f"tedge {i} {j}")
    return "\n".join(lines) + "\n"


def _cmd_kernelize(args) -> int:
    g = read_graph(args.input)
    cls = _graph_class(args)
    if args.problem == "cycle":
        session = make_cycle_session(cls, args.k)
    else:
        session = make_path_session(cls, args.k)
    if args.budget_vertices is not None:
        session.budget_vertices = args.budget_vertices
    if args.budget_param is not None:
        session.budget_param = args.budget_param
    runner = turing_kernel_cycle if args.problem == "cycle" else turing_kernel_path
    result = runner(g, cls, args.k, session=session)
    if args.format == "structured":
        records = [result.report_dict()]
        records.extend(r.to_dict() for r in session.log)
        _emit_structured(records, sys.stdout)
    else:
        sys.stdout.write(result.report_text())
    return EXIT_YES if result.answer else EXIT_NO


def _cmd_solve(args) -> int:
    g = read_graph(args.input)
    if args.problem == "cycle":
        answer = exact_k_cycle(g, args.k)
    else:
        answer = exact_k_path(g, args.k)
    sys.stdout.write(f"answer: {'yes' if answer else 'no'}\n")
    return EXIT_YES if answer else EXIT_NO


def _cmd_decompose(args) -> int:
    g = read_graph(args.input)
    td = tutte_decompose(g)
    sys.stdout.write(format_decomposition(td.base))
    return EXIT_NO


def _cmd_construct(args) -> int:
    g = read_graph(args.input)
    cls = _graph_class(args)
    if args.problem == "cycle":
        cert = construct_cycle(g, cls, args.k)
    else:
        cert = construct_path(g, cls, args.k)
    if cert.kind == "none":
        sys.stdout.write("none\n")
        return EXIT_NO
    if cert.note:
        sys.stdout.write(f"c note: {cert.note}\n")
    seq = " ".join(str(v + 1) for v in cert.vertex_sequence)
    sys.stdout.write(f"{cert.kind}: {seq}\n")
    return EXIT_YES


def _cmd_gen(args) -> int:
    g, cls = gen_instance(args.family, args.n, args.seed, plant_k=args.k)
    text = format_graph(g, comments=[f"family {args.family}", f"class {cls}",
                                     f"n {args.n}", f"seed {args.seed}"])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_NO


def _cmd_validate(args) -> int:
    g = read_graph(args.input)
    cls = _graph_class(args)
    report = validate_class(g, cls)
    sys.stdout.write(f"status: {report.status}\n")
    if report.detail:
        sys.stdout.write(f"detail: {report.detail}\n")
    if report.witness is not None:
        witness = " ".join(str(w) for w in report.witness)
        sys.stdout.write(f"witness: {witness}\n")
    return EXIT_YES if report.status == "violated" else EXIT_NO


def _cmd_reduce_setcover(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        sc = parse_setcover(fh.read())
    out = reduce_setcover_to_multicolored_path(sc)
    if isinstance(out, SolvedDirectly):
        sys.stdout.write(f"solved: {'yes' if out.answer else 'no'}\n")
        sys.stdout.write(f"c reason: {out.why}\n")
        return EXIT_YES if out.answer else EXIT_NO
    text = format_colored_graph(out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    sys.stdout.write(f"c k-prime {out.k_prime}\n")
    return EXIT_NO


def _cmd_cross_validate(args) -> int:
    spec = MatrixSpec(problem=args.problem,
                      families=tuple(args.families),
                      ks=tuple(range(args.k_min, args.k_max + 1)),
                      reps=args.reps,
                      n_min=args.n_min, n_max=args.n_max,
                      with_certificates=args.certificates)
    result = cross_validate(spec, args.seed)
    sys.stdout.write(result.table())
    for f in result.failures:
        sys.stderr.write(f"FAILURE family={f.family} k={f.k} seed={f.seed} "
                         f"kernel={f.kernel_answer} exact={f.exact_answer}\n")
        sys.stderr.write(f.graph_text)
        for rec in f.query_log:
            sys.stderr.write(json.dumps(rec, sort_keys=True) + "\n")
    return EXIT_NO if result.ok else EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turingkernel",
        description="Decompose-query-reduce preprocessing for long paths and cycles")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_class=True):
        p.add_argument("--problem", choices=("path", "cycle"), required=True)
        if with_class:
            p.add_argument("--class", dest="graph_class", choices=CLASS_NAMES,
                           required=True)
            p.add_argument("--t", type=int, default=None,
                           help="parameter for max-degree / k3t-minor-free")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--input", required=True)

    p = sub.add_parser("kernelize", help="decide via the query-bounded pipeline")
    add_common(p)
    p.add_argument("--budget-vertices", type=int, default=None)
    p.add_argument("--budget-param", type=int, default=None)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=_cmd_kernelize)

    p = sub.add_parser("solve", help="exact answer, no query accounting")
    add_common(p, with_class=False)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("decompose", help="dump the adhesion-2 decomposition")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("construct", help="output an explicit path or cycle")
    add_common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--k", type=int, default=6, help="planted cycle length")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("validate", help="check a class declaration")
    p.add_argument("--class", dest="graph_class", choices=CLASS_NAMES, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("reduce-setcover", help="set cover to colorful path")
    p.add_argument("--input", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_reduce_setcover)

    p = sub.add_parser("cross-validate", help="kernel vs exact over a matrix")
    p.add_argument("--problem", choices=("path", "cycle"), required=True)
    p.add_argument("--families", nargs="+", choices=FAMILIES, required=True)
    p.add_argument("--k-min", type=int, default=3)
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--n-min", type=int, default=8)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--certificates", action="store_true")
    p.set_defaults(func=_cmd_cross_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, GraphError, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (BudgetExceeded, OracleTimeout) as exc:
        sys.stderr.write(f"resource error: {exc}\n")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
