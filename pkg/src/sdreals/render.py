"""Text formats for digits and decimal approximations."""

from __future__ import annotations

from fractions import Fraction

from .stream import SDStream, digits_value, prefix

_TOKENS = {1: "+1", 0: "0", -1: "-1"}
_PARSE = {"+1": 1, "1": 1, "0": 0, "-1": -1}


class DigitParseError(ValueError):
    def __init__(self, token: str, position: int):
        super().__init__(f"invalid digit token {token!r} at position {position}")
        self.token = token
        self.position = position


def format_digits(ds) -> str:
    """``[1, 0, -1]`` -> ``"+1 0 -1"``."""
    return " ".join(_TOKENS[d] for d in ds)


def parse_digits(text: str) -> list[int]:
    out = []
    for i, tok in enumerate(text.split()):
        try:
            out.append(_PARSE[tok])
        except KeyError:
            raise DigitParseError(tok, i) from None
    return out


def decimal_places(p: int) -> int:
    # number of decimal digits of 2**p; 10**-places < 2**-p
    return len(str(1 << p))


def format_decimal(q: Fraction, places: int) -> str:
    scaled = round(Fraction(q) * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def decimal_approx(s: SDStream, p: int) -> str:
    """Decimal value of ``s`` with an honest ``2**-p`` error bound.

    The ``p + 2`` digit prefix is within ``2**-(p+2)`` of the value and the
    rounding adds at most half a unit in the last place, which stays below
    ``2**-(p+1)``.
    """
    if p < 1:
        raise ValueError("precision must be a positive integer")
    v = digits_value(prefix(s, p + 2))
    return f"{format_decimal(v, decimal_places(p))} ± 2^-{p}"


def parse_decimal_approx(text: str) -> tuple[Fraction, int]:
    """Inverse of :func:`decimal_approx`: ``(value, p)``."""
    value, _, bound = text.partition(" ± 2^-")
    return Fraction(value), int(bound)
