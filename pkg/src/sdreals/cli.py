"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 when an input violates an
operation's precondition or a ``verify`` run fails.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import ops
from .oracle import parse_rational
from .render import decimal_approx, format_digits
from .stream import prefix

EXIT_USAGE = 1
EXIT_FAILURE = 2

_NEGATIVE_RATIONAL = re.compile(r"-\d+(/\d+)?")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_common(p: argparse.ArgumentParser, verb: str) -> None:
    nargs = ops.ARITY[verb]
    p.add_argument("args", nargs=nargs, type=_rational, metavar="P/Q")
    p.add_argument("-n", dest="digits", type=_positive, default=20, help="number of digits")
    if verb == "sqrt":
        p.add_argument("--modulus", choices=("iota", "poslog"), default="iota")
    if verb == "limit-demo":
        p.add_argument("--seq-shift", choices=("max", "plus"), default="max")
        p.add_argument("--sequence", choices=("constant", "approach"), default="constant")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sdreals", description="Exact real arithmetic on signed-digit streams.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    helps = {
        "digits": "signed digits of a rational",
        "sqrt": "square root of a rational in [0, 1]",
        "avg": "average of two rationals",
        "div": "quotient a/b with |a| <= b and b >= 1/4",
        "limit-demo": "limit of a sequence converging to a rational",
    }
    for verb, text in helps.items():
        _add_common(sub.add_parser(verb, help=text), verb)
    verify = sub.add_parser("verify", help="check a computation against the rational oracle")
    vsub = verify.add_subparsers(dest="target", required=True, parser_class=_Parser)
    for verb in helps:
        _add_common(vsub.add_parser(verb), verb)
    return parser


def _options(ns: argparse.Namespace) -> dict:
    return {
        key: getattr(ns, key)
        for key in ("modulus", "seq_shift", "sequence")
        if hasattr(ns, key)
    }


def _protect_negatives(argv: list[str]) -> list[str]:
    # argparse would take "-3/8" for an option flag
    return [" " + a if _NEGATIVE_RATIONAL.fullmatch(a) else a for a in argv]


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        ns = make_parser().parse_args(_protect_negatives(argv))
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    verb = ns.target if ns.verb == "verify" else ns.verb
    try:
        if ns.verb == "verify":
            verdict = ops.verify(verb, ns.args, ns.digits, **_options(ns))
            print(verdict, file=out)
            return 0 if verdict.ok else EXIT_FAILURE
        stream = ops.build(verb, ns.args, **_options(ns))
        print(format_digits(prefix(stream, ns.digits)), file=out)
        if verb != "digits":
            print(decimal_approx(stream, ns.digits), file=out)
    except ops.PreconditionError as exc:
        print(f"sdreals {verb}: {exc}", file=err)
        return EXIT_FAILURE
    except ArithmeticError as exc:
        print(f"sdreals {verb}: {exc}", file=err)
        return EXIT_FAILURE
    return 0


def main() -> None:
    sys.exit(run())
