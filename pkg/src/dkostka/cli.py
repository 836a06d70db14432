"""Command-line driver: single entries, whole tables, verification suites and
the finite-field oracle.

Exit codes are 0 on success, 1 when a verification or comparison fails and
2 for usage errors (bad notation, sizes out of range, unknown suites).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from typing import Sequence

from .core import DoublePartition, a_stat, parse_double_partition, total_order
from .double import double_kostka_matrix
from .poly import IntPoly, format_poly

MAX_TABLE_N = 6
ORACLE_CAP = 3
ORACLE_OVERRIDE_CAP = 4


class UsageError(Exception):
    """Raised for invalid input; reported with exit code 2."""


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _status(ok: bool, stream) -> str:
    word = "PASS" if ok else "FAIL"
    if _use_color(stream):
        return f"\033[{32 if ok else 31}m{word}\033[0m"
    return word


def _parse(text: str) -> DoublePartition:
    try:
        return parse_double_partition(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


def _matrix(n: int, order_check: bool) -> dict[tuple[DoublePartition, DoublePartition], IntPoly]:
    K = double_kostka_matrix(n)
    if order_check:
        from .verify import alternate_order

        if double_kostka_matrix(n, order=alternate_order(n)) != K:
            raise RuntimeError(f"K matrix for n={n} depends on the total order")
    return K


# ---------------------------------------------------------------------------
# kostka

def cmd_kostka(args, out) -> int:
    lam, mu = _parse(args.lam), _parse(args.mu)
    if lam.size != mu.size:
        raise UsageError(f"sizes differ: |{lam}| = {lam.size}, |{mu}| = {mu.size}")
    k = _matrix(lam.size, args.order_check).get((lam, mu), IntPoly())
    kt = k.invert_variable().shift(a_stat(mu)) if k else IntPoly()
    print(format_poly(k), file=out)
    print(f"modified: {format_poly(kt)}", file=out)
    return 0


# ---------------------------------------------------------------------------
# tables

def table_document(n: int, order_check: bool = False) -> dict:
    """{"n", "order", "entries"} with only nonzero entries, rows/columns in total order."""
    order = total_order(n)
    K = _matrix(n, order_check)
    entries = {
        f"{lam}|{mu}": format_poly(K[lam, mu]) for lam in order for mu in order if (lam, mu) in K
    }
    return {"n": n, "order": [str(x) for x in order], "entries": entries}


def _grid(doc: dict) -> list[list[str]]:
    order, entries = doc["order"], doc["entries"]
    return [[entries.get(f"{r}|{c}", "") for c in order] for r in order]


def render_table(doc: dict, fmt: str) -> str:
    order = doc["order"]
    if fmt == "json":
        return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"
    grid = _grid(doc)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + order)
        for label, row in zip(order, grid):
            writer.writerow([label] + row)
        return buf.getvalue()
    if fmt == "latex":
        lines = [
            f"% K(t) for n = {doc['n']}",
            "\\begin{tabular}{c|" + "c" * len(order) + "}",
            " & " + " & ".join(f"${c}$" for c in order) + " \\\\ \\hline",
        ]
        for label, row in zip(order, grid):
            cells = [f"${_latex_poly(e)}$" if e else "" for e in row]
            lines.append(f"${label}$ & " + " & ".join(cells) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"
    if fmt == "text":
        head = [""] + order
        body = [[label] + row for label, row in zip(order, grid)]
        widths = [max(len(r[i]) for r in [head] + body) for i in range(len(head))]
        return "".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() + "\n" for r in [head] + body)
    raise UsageError(f"unknown format {fmt!r}")


def _latex_poly(text: str) -> str:
    # t^12 -> t^{12}; single-digit exponents stay bare as in the printed tables
    return re.sub(r"\^(\d{2,})", r"^{\1}", text)


def cmd_tables(args, out) -> int:
    if not 1 <= args.n <= MAX_TABLE_N:
        raise UsageError(f"--n must lie in 1..{MAX_TABLE_N}")
    text = render_table(table_document(args.n, args.order_check), args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args, out) -> int:
    from .verify import SUITES, run_suite

    suite = args.suite
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.n == 0:
        print(f"{_status(True, out)} nothing to check for n = 0", file=out)
        return 0
    checks = run_suite(suite, args.n)
    if args.order_check and suite not in ("all", "order"):
        checks += run_suite("order", args.n)
    for c in checks:
        line = f"{_status(c.ok, out)} {c.name}"
        if not c.ok:
            line += f": {c.detail}"
        print(line, file=out)
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=out)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# oracle

def _parse_qs(text: str) -> list[int]:
    try:
        qs = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"--q expects a comma-separated list of primes, got {text!r}") from None
    if not qs:
        raise UsageError("--q is empty")
    return qs


def cmd_oracle(args, out) -> int:
    from .fq import check_field, compare_with_polynomials

    cap = ORACLE_OVERRIDE_CAP if args.allow_n4 else ORACLE_CAP
    if not 0 <= args.n <= cap:
        hint = "" if args.allow_n4 else f" (pass --allow-n4 to raise the cap to {ORACLE_OVERRIDE_CAP})"
        raise UsageError(f"--n must lie in 0..{cap}{hint}")
    if args.n > ORACLE_CAP:
        print(f"warning: n = {args.n} exceeds the default cap {ORACLE_CAP}; this can take minutes", file=sys.stderr)
    qs = _parse_qs(args.q)
    for q in qs:
        try:
            check_field(max(args.n, 1), q, max_n=cap)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    rows = []
    for m in range(1, args.n + 1):
        for q in qs:
            rows.extend(compare_with_polynomials(m, q, reps=args.reps, max_n=cap))
    head = ("kind", "orbit", "with", "q", "count", "poly", "poly@q", "match")
    table = [head] + [
        (r.kind, str(r.orbit), r.key, str(r.q), "/".join(map(str, r.counts)), r.poly, str(r.expected), "yes" if r.match else "NO")
        for r in rows
    ]
    widths = [max(len(t[i]) for t in table) for i in range(len(head))]
    for t in table:
        print("  ".join(c.ljust(w) for c, w in zip(t, widths)).rstrip(), file=out)
    bad = sum(not r.match for r in rows)
    print(f"{_status(not bad, out)} {len(rows) - bad}/{len(rows)} counts match", file=out)
    return 1 if bad else 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dkostka", description="Double Kostka polynomials for bipartitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    order_help = "recompute with a second linear extension of dominance and fail if anything changes"

    p = sub.add_parser("kostka", help="print K and the modified K for one pair of double partitions")
    p.add_argument("lam", metavar="LAMBDA", help="row label, e.g. 21^2.3^2 or .21")
    p.add_argument("mu", metavar="MU", help="column label")
    p.add_argument("--order-check", action="store_true", help=order_help)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("tables", help="export the whole K(t) matrix for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "latex", "text"), default="text")
    p.add_argument("--out", metavar="PATH", help="write to a file instead of stdout")
    p.add_argument("--order-check", action="store_true", help=order_help)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run verification suites for all sizes 1..n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", default="all", metavar="NAME")
    p.add_argument("--order-check", action="store_true", help="also run the order-independence suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare brute-force F_q counts with the Hall polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", default="2,3", metavar="LIST", help="comma-separated primes (default 2,3)")
    p.add_argument("--reps", type=int, default=2, help="representatives per orbit (default 2)")
    p.add_argument("--allow-n4", action="store_true", help=f"raise the size cap from {ORACLE_CAP} to {ORACLE_OVERRIDE_CAP}")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"dkostka {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"dkostka {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
