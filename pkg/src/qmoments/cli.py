"""Command-line entry point: ``qmoments <family|moments|catalan|series|verify>``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from . import families, moments, qseries
from .families import CATALOG, FamilyId
from .qkernel import parse, to_ratfunc

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def _param(text: Optional[str]):
    if text is None:
        return None
    try:
        return to_ratfunc(parse(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse parameter {text!r}: {exc}") from exc


def _family_id(args) -> FamilyId:
    name = args.name
    if name not in CATALOG:
        raise UsageError(f"unknown family {name!r}; known: {', '.join(CATALOG)}")
    try:
        return FamilyId.make(name, args.m, _param(args.z), _param(args.s))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit_rows(fmt: str, header: Sequence[str], rows: List[Sequence], payload: dict) -> str:
    """JSON or CSV rendering; text output is written by each command."""
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_family(args) -> int:
    fid = _family_id(args)
    ns = range(args.n + 1) if args.upto else [args.n]
    polys = [(n, families.family(fid, n, args.route)) for n in ns]
    if args.format == "text":
        if args.upto:
            sys.stdout.write("".join(f"{n}: {p}\n" for n, p in polys))
        else:
            sys.stdout.write(f"{polys[0][1]}\n")
        return 0
    payload = {
        "family": fid.label(),
        "route": args.route,
        "polynomials": [{"n": n, "poly": str(p), "coefficients": p.to_json()} for n, p in polys],
    }
    sys.stdout.write(_emit_rows(args.format, ["n", "poly"], [(n, str(p)) for n, p in polys], payload))
    return 0


def cmd_moments(args) -> int:
    fid = _family_id(args)
    routes = ["triangle", "expand", "series"] if args.route == "all" else [args.route]
    if "triangle" in routes and not families.is_three_term(fid):
        if args.route != "all":
            raise UsageError(f"family {fid.label()} has no three-term recurrence")
        routes.remove("triangle")
    if "series" in routes and not moments.has_series_route(fid):
        if args.route != "all":
            raise UsageError(f"family {fid.label()} has no generating-function quotient")
        routes.remove("series")
    values = {r: moments.moments_by_route(fid, args.n, r) for r in routes}
    first = values[routes[0]]
    agree = all(values[r] == first for r in routes)
    rows = [(fid.m * n, str(first[n])) for n in range(args.n + 1)]
    payload = {
        "family": fid.label(),
        "routes": routes,
        "agree": agree,
        "moments": [{"power": p, "value": v} for p, v in rows],
    }
    if not agree:
        payload["by_route"] = {r: [str(v) for v in values[r]] for r in routes}
    if args.format == "text":
        out = "".join(f"x^{p}: {v}\n" for p, v in rows)
        if not agree:
            out += "routes disagree: " + ", ".join(routes) + "\n"
        sys.stdout.write(out)
    else:
        sys.stdout.write(_emit_rows(args.format, ["power", "value"], rows, payload))
    return 0 if agree else 1


def _catalan_values(variant: str, m: int, n: int) -> list:
    if variant == "classical":
        return [moments.catalan(k) for k in range(n + 1)]
    if variant == "fuss":
        if m < 2:
            raise UsageError("the Fuss-Catalan variant needs --m >= 2")
        return [moments.fuss_catalan(m, k) for k in range(n + 1)]
    if variant == "carlitz":
        return moments.qcatalan_carlitz(n, m)
    return [moments.andrews_catalan(k) for k in range(n + 1)]


def cmd_catalan(args) -> int:
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    values = _catalan_values(args.variant, args.m, args.n)
    shown = list(enumerate(values)) if args.upto else [(args.n, values[args.n])]
    rows = [(k, str(v)) for k, v in shown]
    payload = {"variant": args.variant, "m": args.m, "values": [{"n": k, "value": v} for k, v in rows]}
    if args.format == "text":
        if args.upto:
            sys.stdout.write("".join(f"{k}: {v}\n" for k, v in rows))
        else:
            sys.stdout.write(f"{rows[0][1]}\n")
    else:
        sys.stdout.write(_emit_rows(args.format, ["n", "value"], rows, payload))
    return 0


SERIES = ("E", "G", "F", "G4", "h", "g", "andrews", "carlitz", "cantero-iserles")


def _series(args) -> qseries.TruncSeries:
    order = args.order
    z = _param(args.z)
    name = args.name
    if name == "E":
        return qseries.series_E(args.m, order)
    if name == "G":
        return qseries.series_G(order, z=z)
    if name == "F":
        return qseries.series_F(order, z=z)
    if name == "G4":
        return qseries.series_G4(order)
    if name in ("h", "g"):
        h, g = qseries.series_h_g(order)
        return h if name == "h" else g
    if name == "andrews":
        return moments.gf_moments(FamilyId("u"), order)
    if name == "carlitz":
        return moments.qcatalan_series(order, args.m)
    return moments.cantero_iserles_series(order, z)


def cmd_series(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    ser = _series(args)
    rows = [(k, str(c)) for k, c in enumerate(ser)]
    payload = {"series": args.name, "order": args.order, "coefficients": [v for _, v in rows]}
    if args.format == "text":
        sys.stdout.write("".join(f"u^{k}: {v}\n" for k, v in rows))
    else:
        sys.stdout.write(_emit_rows(args.format, ["power", "coefficient"], rows, payload))
    return 0


def cmd_verify(args) -> int:
    from .verify.registry import load_all
    from .verify.runner import run_suite

    if args.list:
        for check in load_all().values():
            sys.stdout.write(f"{check.id}\t{check.section}\t{check.kind}\t{check.summary.splitlines()[0] if check.summary else ''}\n")
        return 0
    selector = args.suite
    if args.ids:
        selector = [i.strip() for i in args.ids.split(",") if i.strip()]
    try:
        report = run_suite(selector, args.order, args.mode, args.seed, timing=args.timing)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    sys.stdout.write(report.render(args.format))
    return 0 if report.ok else 1


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--name", "--family", dest="name", required=True, help="catalog family name")
    p.add_argument("--m", type=int, default=None, help="step width for m-families")
    p.add_argument("--z", default=None, help="value of the parameter z (default: symbolic)")
    p.add_argument("--s", default=None, help="value of the parameter s (default: symbolic)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmoments", description="Exact q-polynomial families, moments and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="print a polynomial of a catalog family")
    _add_family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=("closed", "recur"), default="closed")
    p.add_argument("--upto", action="store_true", help="print every index from 0 to n")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("moments", help="moments Lambda(x^(m k)) for k = 0..n")
    _add_family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=("triangle", "expand", "series", "all"), default="all")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("catalan", help="Catalan-type numbers")
    p.add_argument("--variant", choices=("classical", "fuss", "carlitz", "andrews"), default="carlitz")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--upto", action="store_true")
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("series", help="coefficients of a named q-series")
    p.add_argument("--name", choices=SERIES, required=True)
    p.add_argument("--order", type=int, default=qseries.DEFAULT_ORDER)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--z", default=None)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run registered identity checks")
    p.add_argument("--suite", default="all", help="all, classical, s1..s5, final, or a single check id")
    p.add_argument("--ids", default=None, help="comma-separated check ids (overrides --suite)")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--mode", choices=("symbolic", "sampled"), default="symbolic")
    p.add_argument("--seed", type=int, default=2012, help="seed for sample points in sampled mode")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-stability)")
    p.add_argument("--list", action="store_true", help="list check ids and exit")
    p.set_defaults(func=cmd_verify)

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=FORMATS, default="text")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key in ("n", "order"):
        if getattr(args, key, 0) is not None and getattr(args, key, 0) < 0:
            parser.error(f"--{key} must be non-negative")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
