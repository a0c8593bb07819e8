"""Command line interface.

    latgraph graph       --group EXPR --kind epow|pow|dirpow|diff --format summary|json|dot
    latgraph lattice     --group EXPR --format summary|json|dot
    latgraph reconstruct --direction lattice-from-epow|epow-from-lattice|pow-from-lattice|
                                      dirpow-from-lattice|diff-from-lattice --from FILE
    latgraph roundtrip   --group EXPR
    latgraph compare     --group-a EXPR --group-b EXPR
    latgraph census      --catalog order16 --kind pow|epow|dirpow|diff|lattice

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded, 4 invalid mathematical input.  All output is
deterministic; ``--seed`` is accepted and ignored because every algorithm
here is deterministic already.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .catalog import (
    FromCayleyFile,
    GroupExprError,
    NamedGroup,
    build_group,
    order16_catalog,
    parse_group_expr,
)
from .group_core import (
    DEFAULT_ORDER_CAP,
    GroupTableError,
    TooLarge,
    is_abelian,
    order_statistics,
)
from .iso import (
    DEFAULT_BUDGET,
    IsoTimeout,
    compare_groups,
    digraph_isomorphism,
    graph_isomorphism,
    isomorphism_classes,
    labeled_lattice_isomorphism,
)
from .lattice import (
    CyclicLattice,
    InvalidLattice,
    build_lattice,
    lattice_from_json,
    lattice_to_json,
)
from .power_graphs import (
    Digraph,
    SimpleGraph,
    diff_oracle,
    dirpow_oracle,
    epow_oracle,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    pow_oracle,
)
from .reconstruct import (
    LabeledDigraph,
    LabeledGraph,
    NotAnEnhancedPowerGraph,
    diff_from_lattice,
    diff_incomparability,
    digraphs_match_up_to_generator_indices,
    dirpow_from_lattice,
    epow_from_lattice,
    graphs_match_up_to_generator_indices,
    label_strings,
    lattice_from_epow,
    oracle_labeling,
    pow_from_lattice,
)


def _order_cap(args) -> int:
    if args.max_order is not None:
        return args.max_order
    return int(os.environ.get("LATGRAPH_MAX_ORDER", DEFAULT_ORDER_CAP))


def _load_group(args) -> NamedGroup:
    if getattr(args, "from_file", None):
        expr = FromCayleyFile(args.from_file)
    elif getattr(args, "group", None):
        expr = parse_group_expr(args.group)
    else:
        raise GroupExprError("provide --group EXPR or --from FILE")
    return build_group(expr, order_cap=_order_cap(args))


def _print_lattice(L: CyclicLattice, fmt: str) -> None:
    if fmt == "summary":
        print(f"nodes={L.node_count} covers={len(L.covers)}")
    elif fmt == "json":
        print(lattice_to_json(L))
    else:
        lines = ["digraph {", "  rankdir=BT;"]
        for v in L.nodes():
            lines.append(f'  {v} [label="{L.orders[v]}"];')
        for lo, hi in sorted(L.covers):
            lines.append(f"  {lo} -> {hi};")
        lines.append("}")
        print("\n".join(lines))


def _print_graph(g: SimpleGraph | Digraph, fmt: str, labels: list[str] | None) -> None:
    if fmt == "summary":
        if isinstance(g, Digraph):
            print(f"vertices={g.vertex_count} arcs={g.arc_count}")
        else:
            print(f"vertices={g.vertex_count} edges={g.edge_count}")
    elif fmt == "json":
        print(graph_to_json(g, labels=labels))
    else:
        print(graph_to_dot(g, labels=labels), end="")


def cmd_graph(args) -> int:
    named = _load_group(args)
    names = list(named.element_names)
    if args.kind == "epow":
        g, labels = epow_oracle(named.group), names
    elif args.kind == "pow":
        g, labels = pow_oracle(named.group), names
    elif args.kind == "dirpow":
        g, labels = dirpow_oracle(named.group), names
    else:
        diff = diff_oracle(named.group)
        g, labels = diff.graph, [names[v] for v in diff.retained]
    _print_graph(g, args.format, labels)
    return 0


def cmd_lattice(args) -> int:
    named = _load_group(args)
    _print_lattice(build_lattice(named.group).lattice, args.format)
    return 0


def cmd_reconstruct(args) -> int:
    text = Path(args.from_file).read_text()
    if args.direction == "lattice-from-epow":
        g = graph_from_json(text)
        if not isinstance(g, SimpleGraph):
            raise NotAnEnhancedPowerGraph("enhanced power graphs are undirected")
        _print_lattice(lattice_from_epow(g), args.format)
        return 0
    L = lattice_from_json(text)
    if args.direction == "epow-from-lattice":
        lg = epow_from_lattice(L)
        _print_graph(lg.graph, args.format, label_strings(lg.labels))
    elif args.direction == "pow-from-lattice":
        lg = pow_from_lattice(L)
        _print_graph(lg.graph, args.format, label_strings(lg.labels))
    elif args.direction == "dirpow-from-lattice":
        ld = dirpow_from_lattice(L)
        _print_graph(ld.digraph, args.format, label_strings(ld.labels))
    else:
        lg = diff_from_lattice(L)
        _print_graph(lg.graph, args.format, label_strings(lg.labels))
    return 0


def cmd_roundtrip(args) -> int:
    named = _load_group(args)
    G = named.group
    LS = build_lattice(G)
    L = LS.lattice
    labeling = oracle_labeling(G, LS)
    budget = args.budget

    results: list[tuple[str, bool]] = []

    rebuilt = lattice_from_epow(epow_oracle(G))
    results.append(
        ("lattice-from-epow", labeled_lattice_isomorphism(rebuilt, L, budget=budget).found)
    )

    oracle_epow = LabeledGraph(graph=epow_oracle(G), labels=labeling)
    results.append(
        ("epow-from-lattice",
         graphs_match_up_to_generator_indices(epow_from_lattice(L), oracle_epow))
    )

    oracle_pow = LabeledGraph(graph=pow_oracle(G), labels=labeling)
    results.append(
        ("pow-from-lattice",
         graphs_match_up_to_generator_indices(pow_from_lattice(L), oracle_pow))
    )

    oracle_dir = LabeledDigraph(digraph=dirpow_oracle(G), labels=labeling)
    results.append(
        ("dirpow-from-lattice",
         digraphs_match_up_to_generator_indices(dirpow_from_lattice(L), oracle_dir))
    )

    diff = diff_oracle(G)
    oracle_diff = LabeledGraph(
        graph=diff.graph, labels=tuple(labeling[v] for v in diff.retained)
    )
    built_diff = diff_from_lattice(L)
    diff_ok = graphs_match_up_to_generator_indices(built_diff, oracle_diff)
    diff_ok = diff_ok and built_diff == diff_incomparability(L)
    results.append(("diff-from-lattice", diff_ok))

    passed = 0
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        passed += ok
    print(f"{passed}/{len(results)} PASS")
    return 0 if passed == len(results) else 1


def _format_stats(stats: dict[int, int]) -> str:
    return "{" + ",".join(f"{d}:{c}" for d, c in sorted(stats.items())) + "}"


def cmd_compare(args) -> int:
    a = build_group(parse_group_expr(args.group_a), order_cap=_order_cap(args))
    b = build_group(parse_group_expr(args.group_b), order_cap=_order_cap(args))
    profile = compare_groups(a.group, b.group, budget=args.budget)
    for name, flag in zip(
        ("lattice_iso", "dirpow_iso", "epow_iso", "pow_iso"), profile.flags
    ):
        print(f"{name}={str(flag).lower()}")
    ab_a, ab_b = is_abelian(a.group), is_abelian(b.group)
    st_a, st_b = order_statistics(a.group), order_statistics(b.group)
    print(f"abelian_a={str(ab_a).lower()} abelian_b={str(ab_b).lower()}")
    print(f"order_statistics_a={_format_stats(st_a)}")
    print(f"order_statistics_b={_format_stats(st_b)}")
    if ab_a != ab_b:
        print("groups differ: abelianness")
    if st_a != st_b:
        print("groups differ: order statistics")
    return 0


def cmd_census(args) -> int:
    if args.catalog != "order16":
        print(f"unknown catalog {args.catalog!r}", file=sys.stderr)
        return 2
    entries = order16_catalog()
    budget = args.budget
    if args.kind == "lattice":
        lattices = [build_lattice(e.group).lattice for e in entries]
        fingerprint = lambda i: (sorted(lattices[i].orders), len(lattices[i].covers))
        iso = lambda i, j: labeled_lattice_isomorphism(
            lattices[i], lattices[j], budget=budget
        ).found
    elif args.kind == "dirpow":
        digraphs = [dirpow_oracle(e.group) for e in entries]
        fingerprint = lambda i: sorted(
            zip((len(nb) for nb in digraphs[i].out_neighbors), digraphs[i].in_degrees())
        )
        iso = lambda i, j: digraph_isomorphism(digraphs[i], digraphs[j], budget=budget).found
    else:
        oracle = {"pow": pow_oracle, "epow": epow_oracle}.get(args.kind)
        if oracle is not None:
            graphs = [oracle(e.group) for e in entries]
        else:
            graphs = [diff_oracle(e.group).graph for e in entries]
        fingerprint = lambda i: (graphs[i].vertex_count, graphs[i].degree_sequence())
        iso = lambda i, j: graph_isomorphism(graphs[i], graphs[j], budget=budget).found
    classes = isomorphism_classes(len(entries), fingerprint, iso)
    print(f"catalog={args.catalog} kind={args.kind} groups={len(entries)} classes={len(classes)}")
    for k, cls in enumerate(classes, start=1):
        print(f"class {k}: " + " ".join(entries[i].name for i in cls))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latgraph",
        description="Power-type graphs and cyclic subgroup lattices of finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="node-expansion budget for isomorphism searches")
        p.add_argument("--max-order", type=int, default=None,
                       help="largest group order to build (default 512, or LATGRAPH_MAX_ORDER)")
        p.add_argument("--seed", type=int, default=None,
                       help="accepted and ignored; all algorithms are deterministic")

    p = sub.add_parser("graph", help="print a power-type graph of a group")
    p.add_argument("--group", help="group expression, e.g. 'Z(2)xZ(6)'")
    p.add_argument("--from", dest="from_file", help="Cayley table CSV file")
    p.add_argument("--kind", required=True, choices=["epow", "pow", "dirpow", "diff"])
    p.add_argument("--format", default="summary", choices=["dot", "json", "summary"])
    common(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("lattice", help="print the cyclic subgroup lattice of a group")
    p.add_argument("--group", help="group expression")
    p.add_argument("--from", dest="from_file", help="Cayley table CSV file")
    p.add_argument("--format", default="summary", choices=["dot", "json", "summary"])
    common(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("reconstruct", help="run a reconstruction on a JSON file")
    p.add_argument("--direction", required=True, choices=[
        "lattice-from-epow", "epow-from-lattice", "pow-from-lattice",
        "dirpow-from-lattice", "diff-from-lattice",
    ])
    p.add_argument("--from", dest="from_file", required=True, help="input JSON file")
    p.add_argument("--format", default="summary", choices=["dot", "json", "summary"])
    common(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("roundtrip", help="verify every reconstruction against the oracles")
    p.add_argument("--group", required=True, help="group expression")
    common(p)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("compare", help="isomorphism profile of two groups")
    p.add_argument("--group-a", required=True)
    p.add_argument("--group-b", required=True)
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("census", help="isomorphism classes across a catalog")
    p.add_argument("--catalog", required=True)
    p.add_argument("--kind", default="pow",
                   choices=["pow", "epow", "dirpow", "diff", "lattice"])
    common(p)
    p.set_defaults(func=cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (NotAnEnhancedPowerGraph, InvalidLattice) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (TooLarge, IsoTimeout) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        # expression/parameter/file/JSON problems are all usage errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
