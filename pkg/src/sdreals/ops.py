"""Named stream computations on rational inputs, paired with exact targets.

The CLI dispatches through :func:`build` and :func:`verify`; nothing numeric
happens outside the library modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .heron import poslog, sqrt_stream, sqrt_stream_fast
from .limit import limit
from .oracle import Enclosure, embed, enclosure, format_rational, sqrt_bounds
from .stream import SDStream
from .transforms import average, divide

_ONE = Fraction(1)
_QUARTER = Fraction(1, 4)


class PreconditionError(ValueError):
    """An input lies outside the domain of the requested operation."""


def _check_unit(q: Fraction, what: str = "argument") -> None:
    if not -1 <= q <= 1:
        raise PreconditionError(f"{what} {format_rational(q)} is outside [-1, 1]")


def check_args(verb: str, args: list[Fraction]) -> None:
    arity = ARITY.get(verb)
    if arity is None:
        raise ValueError(f"unknown operation {verb!r}")
    if len(args) != arity:
        raise ValueError(f"{verb} takes {arity} rational argument(s), got {len(args)}")
    for q in args:
        _check_unit(q)
    if verb == "sqrt" and args[0] < 0:
        raise PreconditionError(f"sqrt needs a value in [0, 1], got {format_rational(args[0])}")
    if verb == "div":
        a, b = args
        if b < _QUARTER:
            raise PreconditionError(f"divisor {format_rational(b)} is below 1/4")
        if abs(a) > b:
            raise PreconditionError(
                f"|{format_rational(a)}| exceeds divisor {format_rational(b)}"
            )


ARITY = {"digits": 1, "sqrt": 1, "avg": 2, "div": 2, "limit-demo": 1}


def approach_sequence(q: Fraction):
    """``n -> q -/+ 2**-(n+1)``, clipped to [-1, 1]; converges to ``q`` with modulus ``p -> p``."""
    step = -1 if q > 0 else 1

    def seq(n: int) -> SDStream:
        x = q + step * Fraction(1, 2 ** (n + 1))
        return embed(min(_ONE, max(-_ONE, x)))

    return seq


def build(
    verb: str,
    args: list[Fraction],
    *,
    modulus: str = "iota",
    seq_shift: str = "max",
    sequence: str = "constant",
) -> SDStream:
    check_args(verb, args)
    if verb == "digits":
        return embed(args[0])
    if verb == "sqrt":
        if modulus == "poslog":
            return sqrt_stream_fast(embed(args[0]))
        if modulus != "iota":
            raise ValueError(f"unknown modulus {modulus!r}")
        return sqrt_stream(embed(args[0]))
    if verb == "avg":
        return average(embed(args[0]), embed(args[1]))
    if verb == "div":
        return divide(embed(args[0]), embed(args[1]))
    q = args[0]
    if sequence == "constant":
        s = embed(q)
        return limit(lambda p: 0, lambda n: s, seq_shift)
    if sequence == "approach":
        return limit(lambda p: p, approach_sequence(q), seq_shift)
    raise ValueError(f"unknown sequence {sequence!r}")


def exact_target(verb: str, args: list[Fraction]) -> Fraction | None:
    """Exact value of the result, or ``None`` when it is irrational (``sqrt``)."""
    if verb in ("digits", "limit-demo"):
        return args[0]
    if verb == "avg":
        return (args[0] + args[1]) / 2
    if verb == "div":
        return args[0] / args[1]
    if verb == "sqrt":
        num, den = args[0].numerator, args[0].denominator
        rn, rd = isqrt(num), isqrt(den)
        return Fraction(rn, rd) if rn * rn == num and rd * rd == den else None
    raise ValueError(f"unknown operation {verb!r}")


def encloses_sqrt(enc: Enclosure, q: Fraction) -> bool:
    """Whether ``enc`` contains ``sqrt(q)``, decided by squaring the endpoints."""
    below = enc.lo <= 0 or enc.lo * enc.lo <= q
    above = enc.hi >= 0 and enc.hi * enc.hi >= q
    return below and above


@dataclass(frozen=True)
class Verdict:
    ok: bool
    enclosure: Enclosure
    target: str

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        relation = "contains" if self.ok else "misses"
        return f"{status} enclosure {self.enclosure} {relation} {self.target}"


def verify(verb: str, args: list[Fraction], n: int, **options) -> Verdict:
    """Compare the ``n``-digit enclosure of the computed stream with the oracle."""
    enc = enclosure(build(verb, args, **options), n)
    exact = exact_target(verb, args)
    if exact is not None:
        return Verdict(exact in enc, enc, format_rational(exact))
    q = args[0]
    return Verdict(
        encloses_sqrt(enc, q), enc, f"sqrt({format_rational(q)}) in {sqrt_bounds(q, n + 8)}"
    )
