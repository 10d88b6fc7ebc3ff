"""Command-line front end.

    knot-mosaics count --quantity period -m 4 -n 4
    knot-mosaics table period-diagonal --max 8
    knot-mosaics verify tables
    knot-mosaics enumerate -m 2 -n 2 --predicate period
    knot-mosaics catalog --format json

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import oracle
from .counting import (METHODS, QUANTITIES, THEOREM_COPRIME, THEOREM_KNOT,
                       THEOREM_PERIOD, THEOREM_PRIME_SQUARE, BURNSIDE_GENERAL,
                       ORACLE, CountResult, InexactDivisionError,
                       root_decimal)
from .journal import Journal, default_cache_dir
from .mosaic import format_mosaic, render_ascii
from .statematrix import DimensionCapError, set_dim_cap
from .verify import compute, oracle_checks, table_checks

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

log = logging.getLogger("knot_mosaics")


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--max-dim-cap", type=int, default=None,
                   help="largest state-matrix dimension to build (default 8192)")
    p.add_argument("--cache-dir", type=Path, default=None,
                   help="result journal directory (default: $KNOT_MOSAICS_CACHE_DIR)")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--threads", type=int, default=1,
                   help="worker processes for orbit sums and oracle searches")
    p.add_argument("-o", "--output", type=Path, default=None)
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="knot-mosaics",
                                     description="Exact counts of knot, period and toroidal mosaics.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", parents=[common], help="count one quantity")
    p.add_argument("--quantity", choices=QUANTITIES, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default=None)

    p = sub.add_parser("table", parents=[common], help="reproduce a reference table")
    p.add_argument("kind", choices=("period-diagonal", "toroidal-grid"))
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run golden and oracle checks")
    p.add_argument("scope", choices=("tables", "oracle", "all"))

    p = sub.add_parser("enumerate", parents=[common], help="list mosaics by brute force")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--predicate", choices=oracle.PREDICATES, default=oracle.PERIOD)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--max-cells", type=int, default=None,
                   help="override the enumeration cap on m*n")

    sub.add_parser("catalog", parents=[common], help="toroidal (2,2) representatives")
    return parser


def _journal(args) -> Journal | None:
    if args.no_cache:
        return None
    directory = args.cache_dir or default_cache_dir()
    return Journal(directory) if directory else None


def _validate(args) -> None:
    if args.threads < 1:
        raise UsageError("--threads must be positive")
    if args.max_dim_cap is not None and args.max_dim_cap < 1:
        raise UsageError("--max-dim-cap must be positive")
    if args.verb in ("count", "enumerate") and (args.m < 1 or args.n < 1):
        raise UsageError("-m and -n must be positive")
    if args.verb == "count":
        if args.quantity == "knot" and (args.m < 2 or args.n < 2):
            raise UsageError("knot counts need m, n >= 2")
        allowed = {"knot": {THEOREM_KNOT}, "period": {THEOREM_PERIOD},
                   "toroidal": {THEOREM_COPRIME, THEOREM_PRIME_SQUARE, BURNSIDE_GENERAL, ORACLE}}
        if args.method is not None and args.method not in allowed[args.quantity]:
            raise UsageError(f"method {args.method} does not count {args.quantity} mosaics")
    if args.verb == "table" and args.max < 1:
        raise UsageError("--max must be positive")


def _emit(args, text: str) -> None:
    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_count(args) -> int:
    if args.method == ORACLE:
        value = oracle.count_toroidal_by_canonicalization(args.m, args.n)
        result = CountResult(args.m, args.n, args.quantity, value, ORACLE)
    else:
        result = compute(args.m, args.n, args.quantity, args.method,
                         _journal(args), args.threads)
    if args.format == "json":
        _emit(args, json.dumps(result.as_json()) + "\n")
    elif args.format == "csv":
        rec = result.as_json()
        _emit(args, _csv([list(rec), list(rec.values())]))
    else:
        _emit(args, f"{result.value}\nmethod: {result.method}\n")
    return EXIT_OK


def cmd_table(args) -> int:
    journal = _journal(args)
    if args.kind == "period-diagonal":
        rows = []
        for n in range(1, args.max + 1):
            value = compute(n, n, "period", journal=journal).value
            rows.append((n, value, root_decimal(value, n * n)))
        if args.format == "json":
            _emit(args, json.dumps([{"n": n, "value": str(v), "root": r}
                                    for n, v, r in rows], indent=1) + "\n")
        elif args.format == "csv":
            _emit(args, _csv([["n", "D_P(n,n)", "root"]] + [list(r) for r in rows]))
        else:
            width = max(len(str(v)) for _, v, _ in rows)
            lines = [f"{'n':>3}  {'D_P(n,n)':>{width}}  D_P^(1/n^2)"]
            lines += [f"{n:>3}  {v:>{width}}  {r}" for n, v, r in rows]
            _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK

    size = args.max
    grid = {(m, n): compute(m, n, "toroidal", journal=journal, workers=args.threads).value
            for m in range(1, size + 1) for n in range(m, size + 1)}
    if args.format == "json":
        _emit(args, json.dumps([{"m": m, "n": n, "value": str(v)}
                                for (m, n), v in grid.items()], indent=1) + "\n")
        return EXIT_OK
    header = ["D_T"] + [f"n={n}" for n in range(1, size + 1)]
    rows = [[f"m={m}"] + [str(grid[m, n]) if n >= m else "" for n in range(1, size + 1)]
            for m in range(1, size + 1)]
    if args.format == "csv":
        _emit(args, _csv([header] + rows))
    else:
        widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip()
                 for r in [header] + rows]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    journal = _journal(args)
    checks = []
    if args.scope in ("tables", "all"):
        checks += table_checks(journal)
    if args.scope in ("oracle", "all"):
        checks += oracle_checks(journal)
    failed = [c for c in checks if not c.ok]
    if args.format == "json":
        text = json.dumps([c.__dict__ for c in checks], indent=1) + "\n"
    else:
        text = "\n".join(c.line() for c in checks)
        text += f"\n{len(checks) - len(failed)}/{len(checks)} checks passed\n"
    _emit(args, text)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_enumerate(args) -> int:
    mosaics = oracle.enumerate_mosaics(args.m, args.n, args.predicate, args.max_cells)
    if args.count_only:
        total = sum(1 for _ in mosaics)
        _emit(args, json.dumps({"m": args.m, "n": args.n, "predicate": args.predicate,
                                "count": str(total)}) + "\n"
              if args.format == "json" else f"{total}\n")
        return EXIT_OK
    if args.format == "json":
        _emit(args, json.dumps([mos.as_rows() for mos in mosaics]) + "\n")
    else:
        _emit(args, "\n".join(format_mosaic(mos) for mos in mosaics))
    return EXIT_OK


def cmd_catalog(args) -> int:
    catalog = oracle.catalog_toroidal_2_2()
    if args.format == "json":
        _emit(args, json.dumps({
            "representatives": [{"rows": mos.as_rows(), "ascii": render_ascii(mos)}
                                for mos in catalog.representatives],
            "class_counts": catalog.class_counts,
            "orbit_sizes": catalog.orbit_sizes,
        }, indent=1) + "\n")
    else:
        _emit(args, oracle.format_catalog(catalog))
        sys.stderr.write("\n".join(catalog.reconciliation()) + "\n")
    return EXIT_OK


COMMANDS = {"count": cmd_count, "table": cmd_table, "verify": cmd_verify,
            "enumerate": cmd_enumerate, "catalog": cmd_catalog}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        _validate(args)
        if args.max_dim_cap is not None:
            set_dim_cap(args.max_dim_cap)
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DimensionCapError, oracle.EnumerationCapError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InexactDivisionError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
