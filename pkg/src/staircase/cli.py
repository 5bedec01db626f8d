"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 internal check failure.
"""

from __future__ import annotations

import argparse
import sys

from staircase.closure import integral_closure, is_concave
from staircase.enumerate import concave_counts, pentagonal_counts, restricted_counts, worker_count
from staircase.genfun import (
    MAX_CHEAP_R,
    NumeratorError,
    asymptotic_estimate,
    extract_qr,
    extract_qr_multivariate,
    pc_series,
    ps_series,
)
from staircase.partition import PartitionParseError, format_partition, parse_partition
from staircase.records import (
    AsymptoticRecord,
    CountRecord,
    PolyRecord,
    PredicateRecord,
    SeriesRecord,
    to_bfile,
    to_csv,
    to_json,
)
from staircase.render import render_ascii, render_svg
from staircase.superconcave import is_superconcave, superconcave_counts

SERIES_NAMES = ("PS", "PSr", "PC", "PCr", "Qr", "Qr-multi")
R_INDEXED = {"PSr", "PCr", "Qr", "Qr-multi"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> range:
    """``7``, ``0..20`` (inclusive) or ``0:21`` (half-open)."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        if ":" in text:
            lo, hi = text.split(":")
            return range(int(lo), int(hi))
        n = int(text)
        return range(n, n + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None


def cmd_check(text: str) -> PredicateRecord:
    lam = parse_partition(text)
    return PredicateRecord(
        partition=format_partition(lam),
        concave=is_concave(lam),
        superconcave=is_superconcave(lam),
        closure=format_partition(integral_closure(lam)),
    )


def cmd_count(kind: str, ns: range, r: int | None = None, workers: int = 1) -> list[CountRecord]:
    if len(ns) == 0:
        return []
    if ns.start < 0:
        raise UsageError("n must be >= 0")
    top = max(ns)
    if kind == "all":
        table = list(pentagonal_counts(top)) if r is None else restricted_counts(top, r)
    elif kind == "concave":
        table = concave_counts(top, r, workers)
    elif kind == "superconcave":
        table = superconcave_counts(top, r)
    else:
        raise UsageError(f"unknown kind {kind!r}")
    return [CountRecord(kind, n, r, table[n]) for n in ns]


def cmd_series(name: str, r: int | None, trunc: int | None, expensive: bool = False, workers: int = 1):
    if name not in SERIES_NAMES:
        raise UsageError(f"unknown series {name!r}")
    if name in R_INDEXED and r is None:
        raise UsageError(f"{name} needs --r")
    if r is not None and r < 0:
        raise UsageError("r must be >= 0")
    if name == "Qr-multi":
        if r < 1:
            raise UsageError("Qr-multi needs r >= 1")
        if r > MAX_CHEAP_R and not expensive:
            raise UsageError(f"Qr-multi with r > {MAX_CHEAP_R} needs --expensive")
        return PolyRecord(name, r, extract_qr_multivariate(r, expensive=expensive).to_text())
    if name == "Qr":
        if r < 1:
            raise UsageError("Qr needs r >= 1")
        q = extract_qr(r)
        return SeriesRecord(name, r, q.order, q.coeffs, q.to_text())
    if trunc is None:
        raise UsageError(f"{name} needs --trunc")
    if trunc < 0:
        raise UsageError("--trunc must be >= 0")
    rr = None if name in ("PS", "PC") else r
    if name in ("PS", "PSr"):
        s = ps_series(rr, trunc)
    else:
        s = pc_series(rr, trunc, workers)
    return SeriesRecord(name, rr, trunc, s.coeffs, s.to_text())


def cmd_render(text: str, style: str = "ascii", with_closure: bool = False) -> str:
    lam = parse_partition(text)
    if style == "svg":
        return render_svg(lam, with_closure)
    return render_ascii(lam, with_closure)


def cmd_asymptotic(ns: list[int]) -> list[AsymptoticRecord]:
    if any(n < 1 for n in ns):
        raise UsageError("n must be >= 1")
    if not ns:
        return []
    table = superconcave_counts(max(ns))
    out = []
    for n in ns:
        est = asymptotic_estimate(n)
        out.append(AsymptoticRecord(n, table[n], est, table[n] / est))
    return out


def emit(records, fmt: str) -> str:
    records = records if isinstance(records, list) else [records]
    if fmt == "json":
        return "".join(to_json(rec) + "\n" for rec in records)
    if fmt == "csv":
        return to_csv(records)
    if fmt == "bfile":
        if len(records) == 1 and isinstance(records[0], SeriesRecord):
            return to_bfile(enumerate(records[0].coefficients))
        if all(isinstance(rec, CountRecord) for rec in records):
            return to_bfile((rec.n, rec.value) for rec in records)
        raise UsageError("b-file output needs a count or a univariate series")
    return "".join(rec.plain() + "\n" for rec in records)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv", "bfile"), default="plain")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    parser = _Parser(prog="staircase", description="Concave and super-concave partitions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="concavity predicates and closure of a partition")
    p.add_argument("partition", help="e.g. 4,4,2,2; empty string or 0 for the empty partition")

    p = sub.add_parser("count", parents=[common], help="count partitions for a range of n")
    p.add_argument("kind", choices=("all", "concave", "superconcave"))
    p.add_argument("n", help="n, lo..hi (inclusive) or lo:hi")
    p.add_argument("--r", type=int, help="at most R parts")

    p = sub.add_parser("series", parents=[common], help="generating-function coefficients and numerators")
    p.add_argument("name", choices=SERIES_NAMES)
    p.add_argument("--r", type=int)
    p.add_argument("--trunc", type=int, metavar="N", help="truncation order")
    p.add_argument("--expensive", action="store_true", help="lift the cost guard on Qr-multi")

    p = sub.add_parser("render", parents=[common], help="draw F(lambda) and I(lambda)")
    p.add_argument("partition")
    p.add_argument("--style", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--with-closure", action="store_true")

    p = sub.add_parser("asymptotic", parents=[common], help="exact p_sc(n) against the asymptotic estimate")
    p.add_argument("n", nargs="+", type=int)
    return parser


def run(args: argparse.Namespace) -> str:
    workers = worker_count()
    if args.command == "check":
        return emit(cmd_check(args.partition), args.format)
    if args.command == "count":
        return emit(cmd_count(args.kind, parse_range(args.n), args.r, workers), args.format)
    if args.command == "series":
        return emit(cmd_series(args.name, args.r, args.trunc, args.expensive, workers), args.format)
    if args.command == "render":
        return cmd_render(args.partition, args.style, args.with_closure)
    if args.command == "asymptotic":
        return emit(cmd_asymptotic(args.n), args.format)
    raise UsageError(f"unknown command {args.command}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = run(args)
    except (UsageError, PartitionParseError) as exc:
        print(f"staircase: error: {exc}", file=sys.stderr)
        return 1
    except NumeratorError as exc:
        print(f"staircase: internal check failed: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
