"""Command-line front end.

Subcommands map one-to-one onto library operations: gen (sequence
samples), verify (CAZAC / bi-unimodularity report), ambiguity (row, full
table, or streamed maximum), sums (Kloosterman, Gauss, the character-sum
form, Weil audit), scan (prime-range sweep), table (per-prime maxima for a
prime list), figure (plot-data CSV).

Exit codes: 0 success, 1 validation error (bad flags, non-prime p,
malformed ranges), 2 mathematical invariant violation (e.g. a measured
maximum at or above the proven bound -- that means a bug, not a finding).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .decomposition import mbound
from .expsums import gauss_sum, jacobsthal_count, kloosterman, salie_form, weil_audit
from .numtheory import ResidueClass
from .scan import (
    BoundViolationError,
    figure_csv,
    figure_data,
    scan_csv,
    scan_jsonl,
    scan_range,
)
from .sequences import bjorck, chirp, sequence_to_text, verify_biunimodular, verify_cazac
from .transform import ambiguity_max, ambiguity_row, ambiguity_table, ambiguity_table_csv

__all__ = ["build_parser", "main", "run"]


class _UsageError(Exception):
    """Command-line validation failure; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; that status is reserved
    # here for invariant violations, so route errors through an exception.
    def error(self, message):
        raise _UsageError(message)


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split(":")
        return int(lo_s), int(hi_s)
    except ValueError:
        raise _UsageError(f"malformed range {text!r}; expected LO:HI") from None


def _parse_class(text: str) -> ResidueClass | None:
    if text == "all":
        return None
    return ResidueClass.ONE_MOD_4 if text == "1mod4" else ResidueClass.THREE_MOD_4


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, out)
    except BaseException:
        os.unlink(tmp)
        raise


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cazac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    gen = sub.add_parser("gen", help="emit sequence samples, one 're,im' per line")
    gen.add_argument("--p", type=int, required=True, help="odd prime length")
    gen.add_argument(
        "--chirp",
        type=int,
        nargs=2,
        metavar=("R", "S"),
        help="emit the quadratic chirp with these coefficients instead of the default sequence",
    )
    gen.add_argument("--out", help="write atomically to FILE instead of stdout")

    verify = sub.add_parser("verify", help="CAZAC and bi-unimodularity report")
    verify.add_argument("--p", type=int, required=True)
    verify.add_argument("--tol", type=float, default=1e-9)

    amb = sub.add_parser("ambiguity", help="ambiguity row, table, or streamed max")
    amb.add_argument("--p", type=int, required=True)
    mode = amb.add_mutually_exclusive_group(required=True)
    mode.add_argument("--max", action="store_true", help="off-origin maximum and argmax")
    mode.add_argument("--row", type=int, metavar="M", help="one row as CSV")
    mode.add_argument("--table", action="store_true", help="full table as CSV")
    amb.add_argument("--out")

    sums = sub.add_parser("sums", help="exponential sums and the Weil audit")
    sums.add_argument("--p", type=int, required=True)
    which = sums.add_mutually_exclusive_group(required=True)
    which.add_argument("--kloosterman", type=int, nargs=2, metavar=("A", "B"))
    which.add_argument("--gauss", type=int, metavar="A")
    which.add_argument("--salie", type=int, metavar="A")
    which.add_argument("--jacobsthal", type=int, nargs=2, metavar=("T", "A"))
    which.add_argument("--weil-audit", action="store_true")

    scan = sub.add_parser("scan", help="sweep a prime range")
    scan.add_argument("--range", required=True, metavar="LO:HI")
    scan.add_argument("--class", dest="klass", choices=("1mod4", "3mod4", "all"), default="all")
    scan.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    scan.add_argument("--full-precision", action="store_true")
    scan.add_argument("--jobs", type=int, default=1)
    scan.add_argument("--out")

    table = sub.add_parser("table", help="measured maxima vs 2/sqrt(p) for listed primes")
    table.add_argument("--primes", required=True, help="comma-separated odd primes")
    table.add_argument("--jobs", type=int, default=1)
    table.add_argument("--out")

    figure = sub.add_parser("figure", help="plot-data CSV for a prime range")
    figure.add_argument("--range", required=True, metavar="LO:HI")
    figure.add_argument("--jobs", type=int, default=1)
    figure.add_argument("--out")

    return parser


def _cmd_gen(args) -> int:
    if args.chirp is not None:
        seq = chirp(args.p, args.chirp[0], args.chirp[1])
    else:
        seq = bjorck(args.p)
    _emit(sequence_to_text(seq), args.out)
    return 0


def _cmd_verify(args) -> int:
    seq = bjorck(args.p)
    report = verify_cazac(seq, tol=args.tol)
    biuni = verify_biunimodular(seq, tol=args.tol)
    flags = (
        f"p={args.p}"
        f" ca_ok={'true' if report.ca_ok else 'false'}"
        f" zac_ok={'true' if report.zac_ok else 'false'}"
        f" biunimodular={'true' if biuni else 'false'}"
        f" max_violation={report.max_violation:.3e}"
    )
    print(flags)
    return 0


def _cmd_ambiguity(args) -> int:
    seq = bjorck(args.p)
    if args.max:
        peak = ambiguity_max(seq)
        print(
            f"p={args.p} max_abs={peak.max_abs:.17g}"
            f" argmax_m={peak.argmax[0]} argmax_n={peak.argmax[1]}"
        )
        return 0
    if args.row is not None:
        row = ambiguity_row(seq, args.row)
        lines = ["m,n,re,im,abs"]
        for n, z in enumerate(row.values):
            lines.append(f"{row.m},{n},{z.real:.17g},{z.imag:.17g},{abs(z):.17g}")
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    _emit(ambiguity_table_csv(ambiguity_table(seq)), args.out)
    return 0


def _cmd_sums(args) -> int:
    p = args.p
    if args.kloosterman is not None:
        a, b = args.kloosterman
        print(f"{kloosterman(a, b, p).value:.17g}")
    elif args.gauss is not None:
        z = gauss_sum(args.gauss, p)
        print(f"{z.real:.17g},{z.imag:.17g}")
    elif args.salie is not None:
        print(f"{salie_form(args.salie, p):.17g}")
    elif args.jacobsthal is not None:
        t, a = args.jacobsthal
        print(jacobsthal_count(t, a, p))
    else:
        print(json.dumps(weil_audit(p).as_dict()))
    return 0


def _cmd_scan(args) -> int:
    lo, hi = _parse_range(args.range)
    records = scan_range(lo, hi, parallelism=args.jobs, class_filter=_parse_class(args.klass))
    if args.format == "jsonl":
        text = scan_jsonl(records)
    else:
        text = scan_csv(records, full_precision=args.full_precision)
    _emit(text, args.out)
    return 0


def _cmd_table(args) -> int:
    try:
        primes = [int(tok) for tok in args.primes.split(",") if tok.strip()]
    except ValueError:
        raise _UsageError(f"malformed prime list {args.primes!r}") from None
    if not primes:
        raise _UsageError("empty prime list")
    lines = ["p,max_ambiguity,two_over_sqrt_p,mbound,exceeds"]
    for p in primes:
        recs = scan_range(p, p, parallelism=1)
        if not recs:
            raise ValueError(f"{p} is not an odd prime")
        rec = recs[0]
        lines.append(
            f"{rec.p},{rec.max_ambiguity:.6f},{rec.two_over_sqrt_p:.6f},"
            f"{mbound(rec.p):.6f},{'true' if rec.exceeds_two_over_sqrt_p else 'false'}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_figure(args) -> int:
    lo, hi = _parse_range(args.range)
    _emit(figure_csv(figure_data(lo, hi, parallelism=args.jobs)), args.out)
    return 0


_DISPATCH = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "ambiguity": _cmd_ambiguity,
    "sums": _cmd_sums,
    "scan": _cmd_scan,
    "table": _cmd_table,
    "figure": _cmd_figure,
}


def run(argv: list[str]) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.subcommand](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BoundViolationError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
