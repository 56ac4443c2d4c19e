"""Command line interface: ``ddcg {classify,construct,verify,tables}``.

Exit codes: 0 success, 1 usage or input error, 2 catalog error, 3 the graph
checked by ``verify`` has no proper divisible design structure.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .catalog import MAX_CATALOG_ORDER, GroupCatalog
from .classifier import classify_order, emit_tables
from .constructions import (
    RegularAction,
    VklGraph,
    complete_vkl,
    empty_vkl,
    graphical_hadamard_registry,
    hadamard_replace,
    kron_allones,
    kron_identity,
    paley_ddcg,
    paley_graph,
    strong_k2,
    translations,
)
from .ddg import DdgParams, ddg_check, params_feasible
from .errors import CatalogError, DdcgError
from .graphs import Graph, common_neighbor_matrix, graph6_decode, graph6_encode, is_regular_action

EXIT_OK, EXIT_USAGE, EXIT_CATALOG, EXIT_NEGATIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_catalog(path: str | None) -> GroupCatalog:
    return GroupCatalog.load(path)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# -- classify ---------------------------------------------------------------

def cmd_classify(args) -> int:
    if not 1 <= args.order <= MAX_CATALOG_ORDER:
        raise UsageError(f"--order must be in 1..{MAX_CATALOG_ORDER}")
    target = None
    if args.params is not None:
        try:
            target = DdgParams.parse(args.params)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if target.v != args.order or not params_feasible(target):
            raise UsageError(f"--params {target} is not feasible for order {args.order}")
    catalog = _load_catalog(args.catalog)
    report = classify_order(catalog, args.order, target=target, jobs=args.jobs)
    text = report.render()
    if target is not None and not report.records:
        text += f"# nonexistent {target}\n"
    _write(text, args.out)
    print(f"order {args.order}: {len(report.records)} records in {report.wall_time:.2f}s", file=sys.stderr)
    return EXIT_OK


# -- construct --------------------------------------------------------------

def _find_action(graph: Graph, catalog: GroupCatalog) -> RegularAction:
    """First catalog group whose translations, in catalog element numbering, preserve ``graph``."""
    for name in catalog.names(graph.v):
        action = translations(catalog.group(name))
        if is_regular_action(graph, action.perms):
            return action
    raise UsageError("graph is not a Cayley graph of any catalog group in its vertex numbering")


def _base_graph(args, catalog_path: str | None) -> tuple[Graph, RegularAction]:
    if args.base_g6 is not None:
        graph = graph6_decode(args.base_g6)
        return graph, _find_action(graph, _load_catalog(catalog_path))
    if args.base is None:
        raise UsageError("a base graph is required (--base or --base-g6)")
    m = re.fullmatch(r"K(\d+)|empty(\d+)|paley:(\d+)", args.base)
    if m is None:
        raise UsageError(f"unknown base {args.base!r}; use K<n>, empty<n> or paley:<q>")
    if m.group(1):
        b = complete_vkl(int(m.group(1)))
    elif m.group(2):
        b = empty_vkl(int(m.group(2)))
    else:
        pg = paley_graph(int(m.group(3)))
        return pg.graph, pg.action
    return b.graph, b.action


def _base_vkl(args, catalog_path: str | None) -> VklGraph:
    graph, action = _base_graph(args, catalog_path)
    k = graph.degree(0)
    lam = int(common_neighbor_matrix(graph)[0, 1]) if graph.v > 1 else 0
    try:
        return VklGraph(graph, k, lam, action)
    except ValueError as exc:
        if isinstance(exc, DdcgError):
            raise
        raise UsageError(f"base graph is not a (v,k,lambda)-graph: {exc}") from None


def cmd_construct(args) -> int:
    kind = args.construction
    if kind == "kron-identity":
        p = None if args.p is None else [int(x) for x in args.p.split(",")]
        out = kron_identity(_base_vkl(args, args.catalog), args.t, p)
    elif kind == "kron-allones":
        out = kron_allones(_base_vkl(args, args.catalog), args.n)
    elif kind == "strong-k2":
        graph, action = _base_graph(args, args.catalog)
        out = strong_k2(graph, action)
    elif kind == "paley":
        out = paley_ddcg(args.q)
    else:
        registry = [h for h in graphical_hadamard_registry(args.order) if h.u == args.u]
        if not registry:
            raise UsageError(f"no registered Hadamard matrix of order {args.order} with u = {args.u}")
        out = hadamard_replace(registry[0], _base_vkl(args, args.catalog))
    print(graph6_encode(out.graph))
    print(f"params {out.params.spaced()}")
    print(f"group {out.action.group.name}")
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    graph = graph6_decode(args.graph6)
    structures = ddg_check(graph)
    proper = [s for s in structures if s.proper]
    for s in proper:
        print(s.params.spaced())
        print("partition " + " | ".join(" ".join(map(str, b)) for b in s.partition))
    if proper:
        return EXIT_OK
    if structures:
        print("improper")
    else:
        print("none")
    return EXIT_NEGATIVE


# -- tables -----------------------------------------------------------------

def cmd_tables(args) -> int:
    if not 1 <= args.max_order <= MAX_CATALOG_ORDER:
        raise UsageError(f"--max-order must be in 1..{MAX_CATALOG_ORDER}")
    catalog = _load_catalog(args.catalog)
    tables = emit_tables(catalog, args.max_order, jobs=args.jobs)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "table1.txt").write_text(tables.table1, encoding="utf-8")
    (out_dir / "table2.txt").write_text(tables.table2, encoding="utf-8")
    print(f"wrote {out_dir / 'table1.txt'} and {out_dir / 'table2.txt'}", file=sys.stderr)
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ddcg", description="Divisible design Cayley graphs: construct, verify, classify.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify all DDCGs of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--params", help="restrict to one parameter set v,k,l1,l2,m,n")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out")
    p.add_argument("--catalog")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="build a DDCG from one of the constructions")
    p.add_argument("construction", choices=["kron-identity", "kron-allones", "strong-k2", "paley", "hadamard"])
    p.add_argument("--base", help="K<n>, empty<n> or paley:<q>")
    p.add_argument("--base-g6", help="base graph in graph6, vertices numbered as a catalog group")
    p.add_argument("--q", type=int, default=5)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--p", help="symmetric permutation of the t blocks, comma separated")
    p.add_argument("--order", type=int, default=4, help="Hadamard matrix order")
    p.add_argument("--u", type=int, default=1, help="Hadamard row sum is 2u")
    p.add_argument("--catalog")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="find divisible design structures of a graph")
    p.add_argument("--graph6", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="write table1.txt and table2.txt")
    p.add_argument("--max-order", type=int, default=MAX_CATALOG_ORDER)
    p.add_argument("--catalog")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CatalogError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CATALOG
    except (DdcgError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
