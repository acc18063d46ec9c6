"""Command line entry point: ``term``, ``verify`` and ``emit-table``."""

from __future__ import annotations

import argparse
import sys

from .horadam_octonion import PRESETS, og_term
from .octonion import format_table
from .sequence import HoradamParams
from .verify import IDENTITIES, GridSpec, write_report

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _interval(text: str) -> tuple[int, int]:
    try:
        if ":" in text[1:]:
            cut = text.index(":", 1)
            lo, hi = int(text[:cut]), int(text[cut + 1 :])
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI or an integer, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty interval {text!r}")
    return lo, hi


def _identity_list(text: str) -> tuple[str, ...]:
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    unknown = [s for s in names if s not in IDENTITIES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown identities {unknown}; choose from {', '.join(IDENTITIES)}"
        )
    return names


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", choices=sorted(PRESETS), help="named parameter set")
    for flag, what in (("a", "w0"), ("b", "w1"), ("p", "coefficient of w_{n-1}"), ("q", "coefficient of w_{n-2}")):
        parser.add_argument(f"-{flag}", type=int, help=what)


def _explicit_params(args) -> dict[str, int]:
    return {k: getattr(args, k) for k in "abpq" if getattr(args, k) is not None}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="horadam", description="Exact Horadam octonion identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    term = sub.add_parser("term", help="print the 8 coefficients of OG_n")
    _add_param_flags(term)
    term.add_argument("-n", type=int, required=True, help="index n >= 0")

    verify = sub.add_parser(
        "verify",
        help="check identities over a parameter grid",
        description="Ranges are LO:HI inclusive; pass negative bounds as --a-range=-2:2.",
    )
    _add_param_flags(verify)
    for flag in "abpq":
        verify.add_argument(f"--{flag}-range", type=_interval, default=(-2, 2), metavar="LO:HI")
    verify.add_argument("--n-max", type=int, default=15)
    verify.add_argument("--identities", type=_identity_list, default=IDENTITIES, metavar="LIST",
                        help="comma separated subset of: " + ", ".join(IDENTITIES))
    verify.add_argument("--out", help="write the report here instead of stdout")
    verify.add_argument("--jobs", type=int, default=1, help="worker processes")

    emit = sub.add_parser("emit-table", help="write the octonion multiplication table fixture")
    emit.add_argument("--out", help="destination file (default stdout)")
    return parser


def _cmd_term(parser, args) -> int:
    given = _explicit_params(args)
    if args.preset and given:
        parser.error("use either --preset or -a/-b/-p/-q, not both")
    if args.preset:
        params = PRESETS[args.preset]
    elif len(given) == 4:
        params = HoradamParams(**given)
    else:
        parser.error("term needs --preset or all of -a, -b, -p, -q")
    if args.n < 0:
        parser.error("-n must be non-negative")
    print(og_term(params, args.n).value)
    return EXIT_OK


def _cmd_verify(parser, args) -> int:
    given = _explicit_params(args)
    if args.preset and given:
        parser.error("use either --preset or -a/-b/-p/-q, not both")
    ranges = {k: getattr(args, f"{k}_range") for k in "abpq"}
    if args.preset:
        params = PRESETS[args.preset]
        ranges = {k: (getattr(params, k),) * 2 for k in "abpq"}
    for k, v in given.items():
        ranges[k] = (v, v)
    if args.n_max < 0:
        parser.error("--n-max must be non-negative")
    grid = GridSpec(
        a_range=ranges["a"], b_range=ranges["b"], p_range=ranges["p"], q_range=ranges["q"],
        n_max=args.n_max, identities=args.identities,
    )
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                tally = write_report(grid, fh, jobs=args.jobs)
            print(tally.summary_line())
        else:
            tally = write_report(grid, sys.stdout, jobs=args.jobs)
    except OSError as exc:
        print(f"horadam: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_MISMATCH if tally.mismatches else EXIT_OK


def _cmd_emit_table(parser, args) -> int:
    text = format_table()
    if not args.out:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"horadam: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"term": _cmd_term, "verify": _cmd_verify, "emit-table": _cmd_emit_table}[args.command]
    return handler(parser, args)


if __name__ == "__main__":
    sys.exit(main())
