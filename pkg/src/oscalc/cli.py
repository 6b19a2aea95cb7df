"""Command-line interface.

Commands:
    oscalc catalog list
    oscalc catalog show NAME
    oscalc analyze TARGET... [--order i,j,...] [--all-orders] [--field q|gf:P]
                             [--r R] [--json]
    oscalc nbc TARGET [--order i,j,...] [--json]
    oscalc nbb TARGET [--order i,j,...] [--json]
    oscalc formal TARGET [--emit-formalization PATH] [--json]

TARGET is a catalog name (e.g. yuz8, boolean:5, uniform:3,6) or a matroid
file.  Exit codes: 0 success, 1 input error, 2 internal-identity failure.
The environment variable OSCALC_MAX_N raises the enumeration guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .catalog import catalog
from .errors import InternalCheckError, OscalcError
from .fields import QQ, parse_field
from .formality import formalization, relation_space
from .io import realization_to_text
from .matroid import LinearOrder
from .complexes import nbb, nbc
from .report import analyze, emit, resolve_target


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="oscalc",
        description="Exact matroid invariants: line-closure, nbc/nbb complexes, "
                    "graded quotient dimensions, formality of realizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="list or show built-in entries")
    p_cat.add_argument("action", choices=["list", "show"])
    p_cat.add_argument("name", nargs="?")

    p_an = sub.add_parser("analyze", help="full report for targets")
    p_an.add_argument("targets", nargs="+")
    p_an.add_argument("--order", action="append", default=None,
                      help="precedence order, e.g. 2,1,3,4,5,6 (repeatable)")
    p_an.add_argument("--all-orders", action="store_true",
                      help="also decide whether nbb = nbc for every order")
    p_an.add_argument("--field", default="q", help="q or gf:<p>")
    p_an.add_argument("--r", type=int, default=None,
                      help="also report the degree-r closure and r-closedness")
    p_an.add_argument("--json", action="store_true")

    for cmd in ("nbc", "nbb"):
        p = sub.add_parser(cmd, help=f"print {cmd} facets for a target")
        p.add_argument("target")
        p.add_argument("--order", default=None)
        p.add_argument("--json", action="store_true")

    p_f = sub.add_parser("formal", help="formality of a realization")
    p_f.add_argument("target")
    p_f.add_argument("--emit-formalization", default=None, metavar="PATH")
    p_f.add_argument("--json", action="store_true")
    return parser


def _cmd_catalog(args, out):
    if args.action == "list":
        for entry in catalog():
            out.write(f"{entry.name:16} n={entry.matroid.n} "
                      f"rank={entry.matroid.full_rank}  {entry.description}\n")
        return 0
    if not args.name:
        raise OscalcError("catalog show needs a name")
    entry = resolve_target(args.name)
    out.write(f"name: {entry.name}\n")
    out.write(f"n: {entry.matroid.n}\nrank: {entry.matroid.full_rank}\n")
    kind = entry.matroid.presentation[0]
    out.write(f"presentation: {kind}\n")
    if entry.realization is not None:
        out.write(realization_to_text(entry.realization, entry.name))
    if entry.description:
        out.write(f"# {entry.description}\n")
    return 0


def _cmd_analyze(args, out):
    field = parse_field(args.field)
    orders = None
    if args.order:
        orders = [LinearOrder.from_text(o) for o in args.order]

    def run(target):
        return analyze(target, orders=orders, all_orders=args.all_orders,
                       field=field, r=args.r)

    if len(args.targets) == 1:
        reports = [run(args.targets[0])]
    else:
        with ThreadPoolExecutor(max_workers=min(4, len(args.targets))) as pool:
            reports = list(pool.map(run, args.targets))
    if args.json:
        if len(reports) == 1:
            out.write(reports[0].to_json())
        else:
            out.write(json.dumps([r.data for r in reports],
                                 indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(emit(r, "text") for r in reports))
    return 0


def _cmd_complex(args, out, which):
    entry = resolve_target(args.target)
    M = entry.matroid
    order = (LinearOrder.from_text(args.order) if args.order
             else LinearOrder.natural(M.n))
    cx = nbc(M, order) if which == "nbc" else nbb(M, order)
    facets = sorted(
        (list(order.sort(f)) for f in cx.facets),
        key=lambda f: [order.position(i) for i in f],
    )
    if args.json:
        out.write(json.dumps(
            {"name": entry.name, "order": list(order.seq), which: facets},
            indent=2, sort_keys=True) + "\n")
    else:
        out.write(f"{which} facets of {entry.name} under order "
                  + ",".join(map(str, order.seq)) + ":\n")
        for f in facets:
            out.write("  " + " ".join(map(str, f)) + "\n")
    return 0


def _cmd_formal(args, out):
    entry = resolve_target(args.target)
    if entry.realization is None:
        raise OscalcError(f"{entry.name} has no matrix realization")
    real = entry.realization
    rs = relation_space(real, entry.matroid)
    formal = rs.dim_F == rs.dim_K
    payload = {
        "name": entry.name,
        "dim_K": rs.dim_K,
        "dim_F": rs.dim_F,
        "formal": formal,
    }
    if args.json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write(f"{entry.name}: dim K = {rs.dim_K}, dim F = {rs.dim_F}, "
                  f"formal: {'yes' if formal else 'no'}\n")
    if args.emit_formalization:
        af = formalization(real)
        text = realization_to_text(af, f"{entry.name}-formalization")
        with open(args.emit_formalization, "w", encoding="utf-8") as handle:
            handle.write(text)
        out.write(f"formalization written to {args.emit_formalization}\n")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "catalog":
            return _cmd_catalog(args, out)
        if args.command == "analyze":
            return _cmd_analyze(args, out)
        if args.command in ("nbc", "nbb"):
            return _cmd_complex(args, out, args.command)
        if args.command == "formal":
            return _cmd_formal(args, out)
        parser.error(f"unknown command {args.command}")
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    except (OscalcError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
