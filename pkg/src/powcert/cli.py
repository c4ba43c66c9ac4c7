"""Command line interface.

Exit codes: 0 success, 1 hypothesis violation, 2 parse error, 3 internal
invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .certify import DEMOS, certify, demo, emit_report, load_polynomial, load_sequence
from .field.poly import format_fraction
from .errors import HypothesisViolation, InvariantFailure, SequenceFormatError
from .power_detect import monic_mth_root
from .proof import binary_bound, general_bound, truncated_root_series
from .recurrence import THEOREM1, THEOREM2, term, validate
from .search import search_powers

EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _cmd_validate(args) -> int:
    seq = load_sequence(args.file)
    result = validate(seq, THEOREM1 if args.theorem == 1 else THEOREM2)
    print(_dump({"target": result.target, "tags": sorted(result.tags), "violations": list(result.violations)}))
    return EXIT_OK if result.passed else EXIT_HYPOTHESIS


def _cmd_term(args) -> int:
    seq = load_sequence(args.file)
    g = term(seq, args.n)
    print(_dump({"n": args.n, "degree": None if g.is_zero() else g.degree, "coefficients": g.to_text()}))
    print(g, file=sys.stderr)
    return EXIT_OK


def _cmd_bound(args) -> int:
    seq = load_sequence(args.file)
    if validate(seq, THEOREM1).passed:
        report = binary_bound(seq)
    elif validate(seq, THEOREM2).passed:
        report = general_bound(seq, workers=args.workers)
    else:
        violations = [f"theorem 1: {v}" for v in validate(seq, THEOREM1).violations]
        violations += [f"theorem 2: {v}" for v in validate(seq, THEOREM2).violations]
        raise HypothesisViolation("no bound applies", violations)
    print(_dump(report.to_text()))
    return EXIT_OK


def _cmd_root(args) -> int:
    f = load_polynomial(args.polyfile)
    if f.is_constant():
        raise SequenceFormatError("root extraction needs a non-constant polynomial")
    h = monic_mth_root(f, args.m)
    out = {"m": args.m, "monic_root": None if h is None else h.to_text()}
    if h is not None:
        out["leading_coefficient"] = f.to_text()[-1]
    print(_dump(out))
    return EXIT_OK


def _cmd_search(args) -> int:
    seq = load_sequence(args.file)
    found = search_powers(seq, args.lo, args.hi, workers=args.workers)
    print(_dump([dict(n=n, **w.to_text()) for n, w in found]))
    return EXIT_OK


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_certify(args) -> int:
    cert = certify(load_sequence(args.file), workers=args.workers)
    _write(emit_report(cert, args.format, include_timing=args.timing), args.out)
    return EXIT_OK


def _cmd_expand(args) -> int:
    f = load_polynomial(args.polyfile)
    try:
        series = truncated_root_series(f, args.m, args.K)
    except ValueError as exc:
        raise HypothesisViolation("expansion precondition failed", [str(exc)]) from None
    tail = series.tail_valuation
    print(
        _dump(
            {
                "terms": [{"exponent": e, "coefficient": format_fraction(c)} for e, c in series.terms],
                "terminates": series.terminates,
                "tail_valuation": None if tail == float("inf") else tail,
            }
        )
    )
    return EXIT_OK


def _cmd_demo(args) -> int:
    try:
        cert = demo(args.name, workers=args.workers)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_PARSE
    _write(emit_report(cert, args.format, include_timing=args.timing), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powcert", description="Certify perfect powers in polynomial power sums."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check theorem hypotheses")
    p.add_argument("file")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("term", help="print G_n")
    p.add_argument("file")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_term)

    p = sub.add_parser("bound", help="index bound (and exponent threshold)")
    p.add_argument("file")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("root", help="monic m-th root of a polynomial")
    p.add_argument("polyfile")
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=_cmd_root)

    p = sub.add_parser("search", help="perfect powers for n in [from, to]")
    p.add_argument("file")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    for name, func, helptext in (
        ("certify", _cmd_certify, "full certificate"),
        ("demo", _cmd_demo, f"built-in demo ({', '.join(DEMOS)})"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("name" if name == "demo" else "file")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--timing", action="store_true", help="include wall-clock timings")
        p.set_defaults(func=func)

    p = sub.add_parser("expand", help="descending series of f^(1/m)")
    p.add_argument("polyfile")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-K", type=int, required=True)
    p.set_defaults(func=_cmd_expand)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HypothesisViolation as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (SequenceFormatError, FileNotFoundError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantFailure as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        # e.g. n out of range, power sum not integral
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
