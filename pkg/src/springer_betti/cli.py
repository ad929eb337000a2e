"""Command-line front end.

Usage:
    springer-betti betti --shape 2,2,1 --format json
    springer-betti poincare --shape 3,2
    springer-betti tableaux --shape 2,2 --standard-only
    springer-betti graph --shape 2,2,1 --out moves.dot
    springer-betti encode 3,4/1,2/5
    springer-betti decode 1,2/3,4/5 0,0,0,1,0
    springer-betti table --n-max 6 --out tables/
    springer-betti relabel --shape 2,2,1 --rho "5-5;4-5;3-5;2-5;1-5;0-5"

Exit status: 0 success, 2 bad input, 3 enumeration cap exceeded,
4 the computation methods disagreed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import (
    BoundsError,
    CapExceededError,
    CrossCheckError,
    NotApplicableError,
    ParseError,
    RhoValidationError,
    ShapeError,
    TableauError,
)
from .kappa import decode, encode, format_kappa, parse_kappa
from .moves import build_move_graph
from .partitions import parse_partition, partitions_of
from .poincare import CSV_HEADER, METHODS, BettiTable, betti_numbers
from .poly import BettiPolynomial
from .rho import parse_rho, relabel_component
from .tableau import (
    CAP_ENV_VAR,
    default_cap,
    enumerate_row_standard,
    enumerate_standard,
    n_inv,
    parse_standard,
    parse_tableau,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_DISAGREE = 4

FORMATS = {
    "betti": ("text", "json", "csv"),
    "poincare": ("text", "json", "csv"),
    "tableaux": ("text", "json", "csv"),
    "graph": ("dot", "json", "text"),
    "encode": ("text", "json"),
    "decode": ("text", "json"),
    "table": ("csv", "json"),
    "relabel": ("text", "json", "csv"),
}


class UsageError(Exception):
    pass


def _cap(value: str) -> int:
    cap = int(value)
    if cap < 1:
        raise argparse.ArgumentTypeError("cap must be >= 1")
    return cap


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default=None, help="output format (depends on command)")
    common.add_argument("--cap", type=_cap, default=None,
                        help=f"enumeration cap (default ${CAP_ENV_VAR} or 10^6)")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")

    shaped = argparse.ArgumentParser(add_help=False)
    shaped.add_argument("--shape", required=True, help='partition such as "2,2,1"')

    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", default="all", choices=METHODS + ("all",))

    parser = argparse.ArgumentParser(
        prog="springer-betti",
        description="Betti numbers of type A Springer fibers from row-standard tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("betti", parents=[common, shaped, method], help="Betti numbers b_0..b_d")
    sub.add_parser("poincare", parents=[common, shaped, method],
                   help="Poincare polynomial indexed by codimension")
    p = sub.add_parser("tableaux", parents=[common, shaped], help="list row-standard tableaux")
    p.add_argument("--standard-only", action="store_true")
    p.add_argument("--max-inversions", type=int, default=None)
    sub.add_parser("graph", parents=[common, shaped], help="move graph as DOT")
    p = sub.add_parser("encode", parents=[common], help="tableau -> (standardization, kappa code)")
    p.add_argument("tableau")
    p = sub.add_parser("decode", parents=[common], help="(standard tableau, kappa code) -> tableau")
    p.add_argument("standard")
    p.add_argument("kappa")
    p = sub.add_parser("table", parents=[common], help="CSV of every shape up to n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p = sub.add_parser("relabel", parents=[common, shaped],
                       help="component relabeling T -> S under a rho sequence")
    p.add_argument("--rho", required=True, help='pairs "i-j" joined by ";" for k = 0..n')
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _betti_text(table: BettiTable) -> str:
    poly = BettiPolynomial(table.poincare_by_codim)
    lines = [
        f"shape: {table.shape}",
        f"n: {table.shape.n}",
        f"dim: {table.dim}",
        f"betti (b_0..b_d): {' '.join(map(str, table.betti))}",
        f"poincare by codim: {poly}",
        f"num_standard: {table.num_standard}",
        f"num_row_standard: {table.num_row_standard}",
        f"method: {table.method}",
    ]
    if table.agreement is not None:
        lines.append(f"agreement: {str(table.agreement).lower()}")
    return "\n".join(lines) + "\n"


def cmd_betti(args) -> str:
    table = betti_numbers(parse_partition(args.shape), args.method, cap=args.cap)
    if args.format == "json":
        return _json(table.to_json())
    if args.format == "csv":
        return _csv([CSV_HEADER, table.csv_row()])
    if args.command == "poincare":
        return f"{BettiPolynomial(table.poincare_by_codim)}\n"
    return _betti_text(table)


def cmd_tableaux(args) -> str:
    shape = parse_partition(args.shape)
    source = (enumerate_standard if args.standard_only else enumerate_row_standard)(shape, cap=args.cap)
    rows = []
    for t in source:
        k = n_inv(t)
        if args.max_inversions is None or k <= args.max_inversions:
            rows.append((str(t), k))
    if args.format == "json":
        return _json([{"tableau": t, "n_inv": k} for t, k in rows])
    if args.format == "csv":
        return _csv([("tableau", "n_inv")] + rows)
    return "".join(f"{t}\t{k}\n" for t, k in rows)


def cmd_graph(args) -> str:
    graph = build_move_graph(parse_partition(args.shape), cap=args.cap)
    comps = graph.components()
    if args.format == "dot":
        return graph.to_dot()
    if args.format == "json":
        return _json({
            "shape": list(graph.shape.parts),
            "vertices": [{"tableau": str(t), "n_inv": n_inv(t)} for t in graph.vertices],
            "edges": [
                {"source": v, "target": w, "labels": sorted(labels)}
                for (v, w), labels in sorted(graph.edge_labels.items())
            ],
            "components": comps,
        })
    return (
        f"vertices: {len(graph.vertices)}\nedges: {graph.num_edges}\n"
        f"components: {len(comps)}\nsizes: {' '.join(str(len(c)) for c in comps)}\n"
    )


def cmd_encode(args) -> str:
    T, kappa = encode(parse_tableau(args.tableau))
    if args.format == "json":
        return _json({"tableau": args.tableau, "standard": str(T), "kappa": format_kappa(kappa)})
    return f"T={T}\nkappa={format_kappa(kappa)}\n"


def cmd_decode(args) -> str:
    t = decode(parse_standard(args.standard), parse_kappa(args.kappa))
    if args.format == "json":
        return _json({"standard": args.standard, "kappa": args.kappa, "tableau": str(t)})
    return f"{t}\n"


def _table_row(job):
    parts, cap = job
    return betti_numbers(parts, "all", cap=cap)


def cmd_table(args) -> str:
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    jobs = [(p.parts, args.cap) for n in range(args.n_max + 1) for p in partitions_of(n)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            tables = list(pool.map(_table_row, jobs))
    else:
        tables = [_table_row(job) for job in jobs]
    if args.format == "json":
        return _json([t.to_json() for t in tables])
    return _csv([CSV_HEADER] + [t.csv_row() for t in tables])


def cmd_relabel(args) -> str:
    shape = parse_partition(args.shape)
    rho = parse_rho(args.rho)
    if rho.n != shape.n:
        raise UsageError(f"rho has n={rho.n} but the shape has n={shape.n}")
    rows = [(str(T), str(relabel_component(T, rho))) for T in enumerate_standard(shape, cap=args.cap)]
    if args.format == "json":
        return _json(dict(rows))
    if args.format == "csv":
        return _csv([("T", "S")] + rows)
    return "".join(f"{t} -> {s}\n" for t, s in rows)


COMMANDS = {
    "betti": cmd_betti,
    "poincare": cmd_betti,
    "tableaux": cmd_tableaux,
    "graph": cmd_graph,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "table": cmd_table,
    "relabel": cmd_relabel,
}


def _resolve_out(args) -> str | None:
    if args.out is None:
        return None
    out = Path(args.out)
    if args.command == "table" and (out.is_dir() or args.out.endswith("/")):
        out.mkdir(parents=True, exist_ok=True)
        return str(out / f"betti_table.{args.format}")
    return args.out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    allowed = FORMATS[args.command]
    if args.format is None:
        args.format = allowed[0]
    try:
        if args.format not in allowed:
            raise UsageError(f"{args.command} supports --format {'/'.join(allowed)}, not {args.format}")
        if args.cap is None:
            args.cap = default_cap()
        out = _resolve_out(args)
        text = COMMANDS[args.command](args)
    except (UsageError, ParseError, ShapeError, TableauError, RhoValidationError,
            BoundsError, NotApplicableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CrossCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    try:
        _emit(text, out)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 1
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
