"""Command-line front door.

Subcommands: build-graph, motif, reduce-sat, maxcut, recognize,
reduce-graph, stats.  Exit codes: 0 computed (including negative
verdicts), 2 input error, 3 budget exceeded, 4 internal consistency
failure.  All reported numbers are decimal; timing goes to stderr so
stdout stays byte-identical across runs.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import fileio
from .errors import InputError, InternalCheckFailed, LimitExceeded, PowgraphError
from .graphs import (
    automorphism_count,
    aut_pow_cyclic_formula,
    build_directed_power_graph,
    build_power_graph,
    power_graph_of_cyclic,
    reduce_digraph,
    reduced_power_digraph,
)
from .groups import DEFAULT_ORDER_LIMIT, build_group
from .motif import MotifInstance, occurs_bruteforce, solve
from .numtheory import divisors, euler_phi, is_prime_power
from .recognition import (
    TargetClass,
    polycyclic_target,
    recognize_nilpotent,
    recognize_undirected,
)
from .reductions import (
    materialize_embedded_subgraph,
    materialize_full_instance,
    maxcut_bruteforce,
    maxcut_embed,
    parse_dimacs,
    reduce_sat,
)


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def cmd_build_graph(args) -> int:
    spec = fileio.parse_group_spec(args.spec, read_file=_read)
    group = build_group(spec, args.limit_order)
    if args.kind == "pow":
        graph = build_power_graph(group)
        _write(args.out, fileio.write_colored_graph(graph))
        print(f"{graph.n} vertices {graph.edge_count()} edges")
    elif args.kind == "dpow":
        graph = build_directed_power_graph(group)
        _write(args.out, fileio.write_colored_graph(graph))
        print(f"{graph.n} vertices {graph.edge_count()} arcs")
    else:
        rg = reduced_power_digraph(group)
        _write(args.out, fileio.write_reduced_graph(rg))
        print(f"{rg.k} classes {len(rg.edges)} edges {rg.total_vertices()} vertices")
    return 0


def cmd_motif(args) -> int:
    graph = fileio.read_colored_graph(_read(args.graph))
    motif = fileio.read_motif(_read(args.motif))
    inst = MotifInstance(graph, motif)
    t0 = time.perf_counter()
    answer = solve(inst, engine=args.engine)
    elapsed = time.perf_counter() - t0
    if args.verify:
        oracle = occurs_bruteforce(inst)
        if oracle.occurs != answer.occurs:
            raise InternalCheckFailed(
                f"engine {answer.engine} disagrees with the oracle on this instance"
            )
    print("occurs" if answer.occurs else "absent")
    if answer.witness:
        print("witness " + " ".join(map(str, answer.witness)))
    print(f"engine {answer.engine}")
    print(f"time {elapsed:.3f}s", file=sys.stderr)
    return 0


def cmd_reduce_sat(args) -> int:
    formula = parse_dimacs(_read(args.cnf))
    gadget, plan = reduce_sat(formula, args.b)
    prefix = args.out_prefix
    _write(prefix + ".gadget.cgraph", fileio.write_colored_graph(gadget.graph))
    _write(prefix + ".motif", fileio.write_motif(gadget.instance.motif))
    _write(prefix + ".plan", fileio.write_plan_manifest(plan))
    if args.full:
        inst = materialize_full_instance(plan, vertex_limit=args.limit_vertices)
        _write(prefix + ".full.cgraph", fileio.write_colored_graph(inst.graph))
        print(f"b {plan.b} N {plan.modulus} full {inst.graph.n} vertices")
    else:
        sub = materialize_embedded_subgraph(plan)
        _write(prefix + ".embedded.cgraph", fileio.write_colored_graph(sub))
        print(f"b {plan.b} N {plan.modulus} subgraph {sub.n} vertices")
    return 0


def cmd_maxcut(args) -> int:
    wg = fileio.read_weighted_graph(_read(args.wgraph))
    if args.embed:
        embedded, vmap = maxcut_embed(wg)
        _write(args.out, fileio.write_weighted_graph(embedded))
        print(f"{embedded.n} vertices map " + " ".join(map(str, vmap)))
        return 0
    value, side = maxcut_bruteforce(wg)
    left = [v for v in range(wg.n) if side[v]]
    right = [v for v in range(wg.n) if not side[v]]
    print(f"value {value}")
    print("side0 " + " ".join(map(str, right)))
    print("side1 " + " ".join(map(str, left)))
    return 0


def _parse_target(text: str) -> TargetClass:
    if text == "abelian":
        return TargetClass("abelian")
    if text == "squarefree":
        return TargetClass("squarefree")
    if text.startswith("polycyclic:"):
        try:
            return polycyclic_target(int(text.split(":", 1)[1]))
        except ValueError as exc:
            raise InputError(f"bad polycyclic length in {text!r}") from exc
    raise InputError(f"unknown target class {text!r}")


def cmd_recognize(args) -> int:
    target = _parse_target(args.target)
    if args.undirected:
        graph = fileio.read_colored_graph(_read(args.graph))
        result = recognize_undirected(graph, target, args.limit_vertices, args.limit_order)
    else:
        text = _read(args.graph)
        if text.lstrip().startswith("rgraph"):
            rg = fileio.read_reduced_graph(text)
        else:
            rg = reduce_digraph(fileio.read_colored_graph(text))
        result = recognize_nilpotent(rg, target, args.limit_order)
    _write(args.out, fileio.write_recognition_manifest(result.verdict, result.witness_spec, result.mapping))
    if not result.verdict and result.reason:
        print(f"reason {result.reason}", file=sys.stderr)
    return 0


def cmd_reduce_graph(args) -> int:
    graph = fileio.read_colored_graph(_read(args.graph))
    if not graph.directed:
        raise InputError("reduce-graph expects a directed graph")
    rg = reduce_digraph(graph)
    _write(args.out, fileio.write_reduced_graph(rg))
    print(f"{rg.k} classes {len(rg.edges)} edges")
    return 0


def cmd_stats(args) -> int:
    try:
        n = int(args.what)
        group = None
    except ValueError:
        spec = fileio.parse_group_spec(args.what, read_file=_read)
        group = build_group(spec, args.limit_order)
        n = group.n
    print(f"n {n}")
    print(f"phi {euler_phi(n)}")
    print(f"divisors {len(divisors(n))}")
    if n >= 6 and not is_prime_power(n):
        print(f"aut_formula {aut_pow_cyclic_formula(n)}")
    else:
        print("aut_formula inapplicable (prime power or n < 6)")
    if n <= args.limit_aut:
        graph = build_power_graph(group) if group is not None else power_graph_of_cyclic(n)
        print(f"aut_brute {automorphism_count(graph, limit=args.limit_aut)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powgraph",
        description="Power graphs of finite groups: construction, motif solving, "
        "SAT/Max-Cut reductions, and recognition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--limit-order", type=int, default=DEFAULT_ORDER_LIMIT, help="max group order")
        p.add_argument("--limit-vertices", type=int, default=10**6, help="max graph vertices")
        p.add_argument("--seed", type=int, default=0, help="seed for generated test data")
        p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = sub.add_parser("build-graph", help="build pow/dpow/reduced graph of a group spec")
    p.add_argument("spec")
    p.add_argument("--kind", choices=["pow", "dpow", "reduced"], default="pow")
    common(p)
    p.set_defaults(func=cmd_build_graph)

    p = sub.add_parser("motif", help="solve a graph motif instance")
    p.add_argument("graph")
    p.add_argument("motif")
    p.add_argument("--engine", choices=["auto", "oracle", "pgroup", "twinclass"], default="auto")
    p.add_argument("--verify", action="store_true", help="cross-check against the oracle")
    common(p)
    p.set_defaults(func=cmd_motif)

    p = sub.add_parser("reduce-sat", help="compile DIMACS 3-CNF into a power-graph motif instance")
    p.add_argument("cnf")
    p.add_argument("--out-prefix", required=True)
    p.add_argument("--b", type=int, default=None, help="override the odd prime count")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--full", action="store_true", help="materialize all of Z_N")
    group.add_argument("--subgraph", action="store_true", help="materialize only the image (default)")
    common(p)
    p.set_defaults(func=cmd_reduce_sat)

    p = sub.add_parser("maxcut", help="embed or solve a weighted max-cut instance")
    p.add_argument("wgraph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--embed", action="store_true")
    group.add_argument("--solve", action="store_true")
    common(p)
    p.set_defaults(func=cmd_maxcut)

    p = sub.add_parser("recognize", help="recognize a (reduced) directed power graph")
    p.add_argument("graph")
    p.add_argument("--class", dest="target", required=True, help="abelian | polycyclic:<c> | squarefree")
    direction = p.add_mutually_exclusive_group()
    direction.add_argument("--directed", action="store_true", help="directed/reduced input (default)")
    direction.add_argument("--undirected", action="store_true", help="undirected desk-scale front end")
    common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("reduce-graph", help="quotient a directed graph by closed twin-classes")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_reduce_graph)

    p = sub.add_parser("stats", help="number-theoretic and automorphism facts for n or a spec")
    p.add_argument("what", help="an integer n or a group spec")
    p.add_argument("--limit-aut", type=int, default=16, help="max n for the brute automorphism count")
    common(p)
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalCheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, PowgraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
