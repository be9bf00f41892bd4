"""Command-line entry point: ``semicayley classify|aut|sweep|golden|gp``.

Exit status is 0 on success, 1 when a check fails (a sweep discrepancy, a
failing golden row, a classifier/normality disagreement) and 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .autsearch import automorphism_group, is_arc_transitive, is_edge_transitive, is_vertex_transitive
from .errors import ParseError, PreconditionError, ResourceLimitError, SemiCayleyError
from .golden import format_golden, run_golden_suite
from .graphs import ConnectionSpec, build_gp, build_sc_graph
from .parse import parse_element_set, parse_group
from .sweep import SweepConfig, run_sweep
from .theory import evaluate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _spec_from_args(args) -> ConnectionSpec:
    G = parse_group(args.group)
    R = parse_element_set(args.R, G)
    L = parse_element_set(args.L, G)
    return ConnectionSpec(G, R, L)


def _dump_graph(graph, path: str):
    p = Path(path)
    p.write_text(graph.to_json() if p.suffix == ".json" else graph.to_edge_list())


def cmd_classify(args) -> int:
    spec = _spec_from_args(args)
    verdict = evaluate(spec)
    if args.dump_graph:
        _dump_graph(build_sc_graph(spec), args.dump_graph)
    if args.format == "json":
        print(json.dumps(verdict.to_dict(), indent=2))
    else:
        print(f"{spec}")
        print(f"  |Aut| = {verdict.aut_order}")
        print(f"  normal: {verdict.normal}")
        print(f"  vertex-transitive: {verdict.vertex_transitive}  edge-transitive: "
              f"{verdict.edge_transitive}  arc-transitive: {verdict.arc_transitive}")
        print(f"  |X| = {verdict.x_size}  |Y| = {verdict.y_size}")
        print(f"  exceptional family: {verdict.theorem_case}"
              + (f"  witness {verdict.witness}" if verdict.witness else ""))
        if verdict.discrepancy:
            print("  DISCREPANCY: family match and computed normality disagree")
    return EXIT_FAIL if verdict.discrepancy else EXIT_OK


def cmd_aut(args) -> int:
    spec = _spec_from_args(args)
    graph = build_sc_graph(spec)
    if args.dump_graph:
        _dump_graph(graph, args.dump_graph)
    group = automorphism_group(graph)
    print(f"{spec}: |Aut| = {group.order()}")
    for g in group.generators:
        print(f"  {g}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        max_group_order=args.max_order,
        include_disconnected=args.include_disconnected,
        workers=args.workers,
        output_format=args.format,
        dump_graphs=bool(args.dump_graphs),
        dedupe=not args.no_dedupe,
    )
    report = run_sweep(cfg, dump_dir=args.dump_graphs)
    text = report.render()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    summary = report.summary()
    print(
        f"{summary['instances']} instances, {summary['discrepancies']} discrepancies, "
        f"{summary['structural_violations']} structural violations, {summary['errors']} errors",
        file=sys.stderr,
    )
    return EXIT_OK if report.verified else EXIT_FAIL


def cmd_golden(args) -> int:
    rows = run_golden_suite()
    print(format_golden(rows))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def cmd_gp(args) -> int:
    graph = build_gp(args.n, args.k)
    if args.dump_graph:
        _dump_graph(graph, args.dump_graph)
    group = automorphism_group(graph)
    vt = is_vertex_transitive(graph, group)
    et = is_edge_transitive(graph, group)
    at = is_arc_transitive(graph, group)
    if at:
        kind = "arc-transitive"
    elif et:
        kind = "edge-transitive"
    elif vt:
        kind = "vertex-transitive"
    else:
        kind = "intransitive"
    print(f"GP({args.n},{args.k}): {graph.n} vertices, |Aut| = {group.order()}, {kind}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semicayley", description="Automorphism groups and normality of one-matching semi-Cayley graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("classify", cmd_classify, "compute the verdict for one SC(G; R, L, {0})"),
        ("aut", cmd_aut, "print |Aut| and generators of one SC(G; R, L, {0})"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("group", help="group spec, e.g. Z10xZ2")
        p.add_argument("--R", required=True, help='element set, e.g. "(1,0),(9,0)"; "" for empty')
        p.add_argument("--L", required=True, help="element set")
        p.add_argument("--dump-graph", metavar="PATH", help="write the graph (edge list, or JSON if *.json)")
        if name == "classify":
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)

    p = sub.add_parser("sweep", help="exhaustive sweep over abelian groups")
    p.add_argument("--max-order", type=int, default=24)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--include-disconnected", action="store_true")
    p.add_argument("--no-dedupe", action="store_true", help="skip Aut(G)-orbit deduplication")
    p.add_argument("--dump-graphs", metavar="DIR", help="write every instance graph into DIR")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("golden", help="run the named-instance regression table")
    p.set_defaults(func=cmd_golden)

    p = sub.add_parser("gp", help="generalized Petersen graph GP(n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--dump-graph", metavar="PATH")
    p.set_defaults(func=cmd_gp)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ParseError, PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SemiCayleyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
