"""Command-line front end.

Exit codes: 0 success, 1 bound failures on the corrected formulas,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import IO, List, Optional, Sequence

from .bounds import CORRECTED, KINDS, VARIANTS, bound_pair
from .graph import Graph, GraphError, GraphParams, params_of
from .graph6 import Graph6Error, parse_graph6, read_graph6_lines, write_graph6
from .indices import eso, eu, sombor
from .products import product
from .verify import (
    SweepConfig,
    bracket_tolerance,
    make_record,
    run_sweep,
    seed_header,
    write_records_csv,
    write_records_jsonl,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _num(x: float, precision: int) -> str:
    return f"{x:.{precision}g}"


def _emit(rows: List[dict], fmt: str, precision: int, out: IO[str]) -> None:
    """Write rows as CSV (with header) or JSON lines."""
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
        return
    if not rows:
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow([
            _num(v, precision) if isinstance(v, float)
            else ("true" if v is True else "false" if v is False else v)
            for v in row.values()
        ])


def _round_row(row: dict, precision: int) -> dict:
    return {k: float(_num(v, precision)) if isinstance(v, float) else v for k, v in row.items()}


def _load_graphs(args: argparse.Namespace, stdin: IO[str]) -> List[Graph]:
    try:
        if args.graphs:
            return list(read_graph6_lines(args.graphs))
        if args.input in (None, "-"):
            return list(read_graph6_lines(stdin))
        with open(args.input, encoding="ascii") as fh:
            return list(read_graph6_lines(fh))
    except OSError as exc:
        raise UsageError(f"cannot read input: {exc}") from exc
    except (Graph6Error, UnicodeDecodeError) as exc:
        raise UsageError(f"parse error: {exc}") from exc


def _parse_one(text: str, what: str) -> Graph:
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise UsageError(f"parse error in {what}: {exc}") from exc


def _parse_params(text: str) -> GraphParams:
    try:
        n, m, dmax, dmin = (int(x) for x in text.split(","))
        return GraphParams(n=n, m=m, max_deg=dmax, min_deg=dmin)
    except (ValueError, GraphError) as exc:
        raise UsageError(f"invalid parameters {text!r}: {exc}; expected n,m,max_deg,min_deg") from exc


def cmd_index(args: argparse.Namespace, out: IO[str], stdin: IO[str]) -> int:
    rows = []
    for g in _load_graphs(args, stdin):
        if g.n == 0:
            raise UsageError("indices are undefined on the empty graph")
        rows.append({"g6": write_graph6(g), "n": g.n, "m": g.m,
                     "eso": eso(g), "eu": eu(g), "so": sombor(g)})
    if args.format == "json":
        rows = [_round_row(r, args.precision) for r in rows]
    _emit(rows, args.format, args.precision, out)
    return EXIT_OK


def cmd_product(args: argparse.Namespace, out: IO[str], stdin: IO[str]) -> int:
    g1 = _parse_one(args.g1, "first graph")
    g2 = _parse_one(args.g2, "second graph")
    try:
        prod = product(args.kind, g1, g2)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    out.write(write_graph6(prod) + "\n")
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, out: IO[str], stdin: IO[str]) -> int:
    graphs = None
    if args.g1 is not None:
        if args.g2 is None or args.p1 or args.p2:
            raise UsageError("give either two graph6 strings or --p1 and --p2")
        graphs = (_parse_one(args.g1, "first graph"), _parse_one(args.g2, "second graph"))
        try:
            p1, p2 = params_of(graphs[0]), params_of(graphs[1])
        except GraphError as exc:
            raise UsageError(str(exc)) from exc
    elif args.p1 and args.p2:
        p1, p2 = _parse_params(args.p1), _parse_params(args.p2)
    else:
        raise UsageError("give either two graph6 strings or --p1 and --p2")

    bp = bound_pair(args.kind, p1, p2, args.variant)
    row = {"kind": bp.theorem, "variant": bp.formula_variant,
           "alpha1": bp.alpha1, "alpha2": bp.alpha2}
    if graphs is not None:
        index_name, op = args.kind.split("-")
        prod = product(op, *graphs)
        true_value = eso(prod) if index_name == "eso" else eu(prod)
        rec = make_record(args.g1, args.g2, args.kind, args.variant, true_value,
                          bp.alpha1, bp.alpha2, args.tolerance)
        tol = bracket_tolerance(true_value, bp.alpha1, bp.alpha2, args.tolerance)
        row.update({
            "true_value": true_value,
            "lower_ok": rec.lower_ok,
            "upper_ok": rec.upper_ok,
            "lower_equal": abs(true_value - bp.alpha1) <= tol,
            "upper_equal": abs(bp.alpha2 - true_value) <= tol,
        })
    if args.format == "json":
        row = _round_row(row, args.precision)
    _emit([row], args.format, args.precision, out)
    return EXIT_OK


def _parse_kinds(text: str) -> tuple:
    if text == "all":
        return KINDS
    kinds = tuple(k.strip() for k in text.split(",") if k.strip())
    bad = [k for k in kinds if k not in KINDS]
    if bad or not kinds:
        raise UsageError(f"unknown kind(s) {', '.join(bad) or '(none)'}; choose from all, {', '.join(KINDS)}")
    return kinds


def _parse_variants(text: str) -> tuple:
    if text == "all":
        return VARIANTS
    if text == "corrected":
        return (CORRECTED,)
    if text in VARIANTS:
        return (text,)
    raise UsageError(f"unknown variant {text!r}; choose from corrected, all, {', '.join(VARIANTS)}")


def cmd_verify(args: argparse.Namespace, out: IO[str], stdin: IO[str]) -> int:
    try:
        cfg = SweepConfig(
            max_order_1=args.max_order,
            max_order_2=args.max_order_2 if args.max_order_2 is not None else args.max_order,
            mode=args.mode,
            sample_count=args.samples,
            rng_seed=args.seed,
            tolerance=args.tolerance,
            kinds=_parse_kinds(args.kinds),
            variants=_parse_variants(args.variant),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    result = run_sweep(cfg)
    if args.records:
        writer = write_records_csv if args.records_format == "csv" else write_records_jsonl
        if args.records == "-":
            writer(result.records, sys.stderr, seed_header(cfg))
        else:
            with open(args.records, "w", encoding="ascii", newline="") as fh:
                writer(result.records, fh, seed_header(cfg))
    out.write(json.dumps(result.summary_document(), indent=2, sort_keys=True) + "\n")
    return EXIT_FAIL if result.corrected_failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sombor-bounds",
        description="Elliptic/Euler Sombor indices, join and corona products, and bound checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--precision", type=int, default=9, help="significant digits (default 9)")

    p = sub.add_parser("index", help="ESO, EU and SO of graph6 inputs")
    p.add_argument("graphs", nargs="*", help="graph6 records (default: read --input or stdin)")
    p.add_argument("-i", "--input", help="file with one graph6 record per line; '-' for stdin")
    output_flags(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("product", help="print the graph6 of a join or corona product")
    p.add_argument("kind", choices=("join", "corona"))
    p.add_argument("g1")
    p.add_argument("g2")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("bounds", help="evaluate a bound pair from graphs or parameters")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("g1", nargs="?")
    p.add_argument("g2", nargs="?")
    p.add_argument("--p1", help="first factor as n,m,max_deg,min_deg")
    p.add_argument("--p2", help="second factor as n,m,max_deg,min_deg")
    p.add_argument("--variant", choices=VARIANTS, default=CORRECTED)
    p.add_argument("--tolerance", type=float, default=1e-9)
    output_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="sweep graph pairs and check every bound")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--max-order-2", type=int, default=None,
                   help="order bound for the second factor (default: --max-order)")
    p.add_argument("--kinds", default="all", help="'all' or a comma list of " + ", ".join(KINDS))
    p.add_argument("--variant", default="corrected",
                   help="corrected (default), statement, proof-conclusion or all")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--records", help="write every record to this path ('-' for stderr)")
    p.add_argument("--records-format", choices=("csv", "jsonl"), default="csv")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[IO[str]] = None,
         stdin: Optional[IO[str]] = None) -> int:
    out = out if out is not None else sys.stdout
    stdin = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, stdin)
    except UsageError as exc:
        print(f"sombor-bounds {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
