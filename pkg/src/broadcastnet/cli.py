"""Command-line entry point: ``broadcastnet <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings
from pathlib import Path

from . import bounds, broadcast, cayley, catalog, exact, families, groups, search

DEFAULT_CATALOG = "broadcast_catalog.jsonl"
DEFAULT_SEED = 20240101


class CLIError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return v


def _cayley_from_args(args) -> cayley.CayleyGraph:
    G = groups.parse_group_spec(args.group)
    gens = groups.parse_elements(G, args.generators)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", cayley.DisconnectedWarning)
        cg = cayley.build_cayley(G, gens)
    for w in caught:
        print(f"warning: disconnected: {w.message}", file=sys.stderr)
    return cg


def cmd_bounds(args) -> None:
    dmax = args.delta_max or args.max
    tmax = args.time_max or args.max
    if dmax is None or tmax is None or dmax < 2 or tmax < 2:
        raise argparse.ArgumentTypeError("bounds needs --max (or --delta-max and --time-max) of at least 2")
    table = bounds.bound_table(dmax, tmax)
    print(table.render(args.format))


def cmd_build(args) -> None:
    cg = _cayley_from_args(args)
    g = cg.graph
    connected = g.is_connected()
    if args.format == "json-lines":
        print(json.dumps({"group": cg.group.text, "order": cg.order, "degree": cg.degree,
                          "edges": g.num_edges, "connected": connected}))
    else:
        print(f"order {cg.order}, degree {cg.degree}, {'connected' if connected else 'disconnected'}")
        if connected and args.diameter:
            print(f"diameter {cayley.diameter(g)}")
    if args.export:
        text = cayley.export_graph(g, args.export)
        if args.output:
            Path(args.output).write_text(text + "\n")
        else:
            print(text)


def cmd_simulate(args) -> None:
    cg = _cayley_from_args(args)
    scheme = broadcast.parse_scheme(args.scheme, cg.group)
    origin = args.origin
    if origin is not None and not 0 <= origin < cg.order:
        raise CLIError(f"origin {origin} out of range 0..{cg.order - 1}")
    trace = broadcast.simulate(cg, scheme, origin, args.max_rounds, args.keep_receipt_generator)
    for r, calls in enumerate(trace.rounds, 1):
        print(f"round {r}: " + ", ".join(f"{u}->{v}" for u, v in calls))
    if trace.complete:
        print(f"completed in {trace.completion_round} rounds")
    else:
        print(f"incomplete after {len(trace.rounds)} rounds ({len(trace.informed_time)} of {cg.order} informed)")


def _graph_from_args(args) -> cayley.Graph:
    if args.named:
        return cayley.named_graph(args.named)
    if args.edges:
        return cayley.read_edge_list(Path(args.edges).read_text(), name=args.edges)
    cg = _cayley_from_args(args)
    return cg.graph


def cmd_exact(args) -> None:
    if not (args.named or args.edges or (args.group and args.generators)):
        raise argparse.ArgumentTypeError("exact needs --named, --edges or -g/-s")
    g = _graph_from_args(args)
    if args.origin is not None:
        res = exact.exact_broadcast_time_from(g, args.origin, args.cap)
        print(f"b({args.origin}) = {res.rounds}")
        print(res.witness.export())
        return
    b = exact.exact_broadcast_time(g, args.cap)
    print(f"b = {b}")
    if args.witness:
        print(exact.exact_broadcast_time_from(g, 0, args.cap).witness.export())


def _family_witness(kind: str, delta: int):
    if kind == "dihedral":
        return families.dihedral_family(delta)
    if kind == "hypercube":
        return families.hypercube_family(delta)
    return families.cycle_family(delta)


def cmd_family(args) -> int | None:
    w = _family_witness(args.kind, args.delta)
    if args.action == "show":
        print(f"group {w.group.text}")
        print(f"generators {w.generator_text}")
        print(f"scheme {w.scheme_text}")
        print(f"delta {w.delta}, t {w.t}, order {w.expected_order}")
        return
    report = families.verify_family_witness(w)
    print(report.summary())
    for c in report.failures():
        print(f"  {c.name}: {c.detail}")
    return 0 if report.ok else 1


def cmd_search(args) -> None:
    res = search.search(
        args.family, args.delta, args.time, budget=args.budget, seed=args.seed,
        max_order=args.max_order, jobs=args.jobs, schemes=args.schemes,
    )
    print(f"evaluated {res.evaluated} candidates over {res.groups_visited} groups", file=sys.stderr)
    if not res.records:
        print("no witness found")
        return
    shown = res.records[: args.top]
    print(catalog.render_catalog(shown, "json-lines" if args.format == "json-lines" else "tsv"))
    if args.catalog:
        ok = catalog.catalog_update(args.catalog, res.records[0])
        print(f"catalog {'updated' if ok else 'unchanged'}", file=sys.stderr)


def cmd_catalog(args) -> int | None:
    path = args.catalog
    if args.action == "verify":
        report = catalog.catalog_verify(path)
        for line in report.lines():
            print(line)
        if not report.ok:
            return 1
    elif args.action == "show":
        print(catalog.render_catalog(catalog.load_catalog(path), args.format))
    elif args.action == "seed":
        for rec, ok in catalog.seed_catalog(path, args.max_delta, args.max_time):
            print(f"{'inserted' if ok else 'kept existing'} ({rec.delta},{rec.time}) order {rec.order} {rec.group}")
    elif args.action == "update":
        if not args.record:
            raise argparse.ArgumentTypeError("catalog update needs --record (a JSON record line, or @file)")
        text = Path(args.record[1:]).read_text() if args.record.startswith("@") else args.record
        ok = False
        for line in text.splitlines():
            if line.strip():
                rec = catalog.CatalogRecord.from_json(line)
                ok = catalog.catalog_update(path, rec)
                print(f"{'inserted' if ok else 'not inserted'} ({rec.delta},{rec.time}) order {rec.order}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="broadcastnet", description="Cayley-graph broadcast networks.")
    p.add_argument("-v", "--verbose", action="store_true", help="progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def add_group_args(sp, required=True):
        sp.add_argument("-g", "--group", required=required, help='e.g. "dihedral(7)"')
        sp.add_argument("-s", "--generators", required=required, help='e.g. "(1,0),(1,1),(1,3)"')

    sp = sub.add_parser("bounds", help="Moore-type upper bounds M(delta, t)")
    sp.add_argument("--max", type=int)
    sp.add_argument("--delta-max", type=int)
    sp.add_argument("--time-max", type=int)
    sp.add_argument("--format", choices=["tsv", "pretty"], default="pretty")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("build", help="build a Cayley graph and report its parameters")
    add_group_args(sp)
    sp.add_argument("--export", choices=["edge-list", "dot"])
    sp.add_argument("-o", "--output")
    sp.add_argument("--diameter", action="store_true")
    sp.add_argument("--format", choices=["pretty", "json-lines"], default="pretty")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("simulate", help="replay a broadcast scheme")
    add_group_args(sp)
    sp.add_argument("--scheme", default="fixed", help='"fixed", "perm: 1,2,3; ..." or "rounds: <elements>"')
    sp.add_argument("--origin", type=int, help="vertex index (default: identity)")
    sp.add_argument("--max-rounds", type=_positive)
    sp.add_argument("--keep-receipt-generator", action="store_true")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("exact", help="exact broadcast time of a small graph")
    sp.add_argument("--named", help="petersen, cycle(n), complete(n), star(k)")
    sp.add_argument("--edges", help="edge-list file")
    add_group_args(sp, required=False)
    sp.add_argument("--origin", type=int)
    sp.add_argument("--cap", type=_positive, default=exact.DEFAULT_VERTEX_CAP)
    sp.add_argument("--witness", action="store_true")
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("family", help="closed-form families")
    sp.add_argument("action", choices=["verify", "show"])
    sp.add_argument("--delta", type=_positive, required=True)
    sp.add_argument("--kind", choices=["dihedral", "hypercube", "cycle"], default="dihedral",
                    help="cycle takes --delta as t (the delta = 2 row)")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("search", help="search a group family for broadcast witnesses")
    sp.add_argument("--family", choices=list(search.FAMILIES), required=True)
    sp.add_argument("--delta", type=_positive, required=True)
    sp.add_argument("--time", type=_positive, required=True)
    sp.add_argument("--budget", type=_positive, default=10_000)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--max-order", type=_positive)
    sp.add_argument("--schemes", choices=["fixed", "perm", "both"], default="fixed")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--top", type=_positive, default=5)
    sp.add_argument("--format", choices=["tsv", "json-lines"], default="tsv")
    sp.add_argument("--catalog", help="insert the best record into this catalog")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("catalog", help="verify, show, seed or update a catalog file")
    sp.add_argument("action", choices=["verify", "show", "seed", "update"])
    sp.add_argument("--catalog", default=DEFAULT_CATALOG)
    sp.add_argument("--format", choices=["pretty", "tsv", "json-lines"], default="pretty")
    sp.add_argument("--record")
    sp.add_argument("--max-delta", type=_positive, default=8)
    sp.add_argument("--max-time", type=_positive, default=10)
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        code = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (CLIError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
