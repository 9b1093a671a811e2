"""Exact rational oracle: embedding, enclosures, square-root bounds, Heron iterates.

Nothing here uses floating point.  These functions are the independent
reference that the stream operators are checked against.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .stream import SDStream, prefix, digits_value

_QUARTER = Fraction(1, 4)
_RAT_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optional sign on ``p``)."""
    m = _RAT_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}; expected p/q or p")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, q) -> bool:
        return self.lo <= q <= self.hi

    def intersects(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


def embed(q) -> SDStream:
    """Signed-digit stream of a rational ``q`` in [-1, 1].

    Digit rule: -1 below -1/4, 1 above 1/4, else 0; then continue with
    ``2q - d``.  Rationals have eventually periodic orbits, so the stream
    is built lazily with one memoized cell per visited remainder.
    """
    q = Fraction(q)
    if not -1 <= q <= 1:
        raise ValueError(f"cannot embed {q}: outside [-1, 1]")
    cells: dict[Fraction, SDStream] = {}

    def cell(x: Fraction) -> SDStream:
        found = cells.get(x)
        if found is not None:
            return found
        if x < -_QUARTER:
            d = -1
        elif x > _QUARTER:
            d = 1
        else:
            d = 0
        r = 2 * x - d
        made = cells[x] = SDStream(d, lambda: cell(r))
        return made

    return cell(q)


def enclosure(s: SDStream, n: int) -> Enclosure:
    """``[v - 2**-n, v + 2**-n]`` where ``v`` is the value of the ``n``-digit prefix."""
    v = digits_value(prefix(s, n))
    eps = Fraction(1, 1 << n)
    return Enclosure(v - eps, v + eps)


def sqrt_bounds(q, p: int) -> Enclosure:
    """Enclosure of ``sqrt(q)`` of width at most ``2**-p``.

    Uses integer square roots on ``q * 4**p`` and certifies both endpoints by
    squaring.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"sqrt_bounds of negative rational {q}")
    scale = 1 << p
    # floor(sqrt(num * 4^p / den)) computed exactly
    r = isqrt(q.numerator * scale * scale // q.denominator)
    lo = Fraction(r, scale)
    hi = lo if lo * lo == q else Fraction(r + 1, scale)
    assert lo * lo <= q <= hi * hi
    return Enclosure(lo, hi)


def heron_rat(q, n: int) -> Fraction:
    """Exact Heron iterate starting at 1: ``h <- (h + q/h) / 2``, ``n`` times."""
    q = Fraction(q)
    h = Fraction(1)
    for _ in range(n):
        h = (h + q / h) / 2
    return h


def heron_error(q, n: int, p: int = 64) -> Enclosure:
    """Enclosure of ``heron_rat(q, n) - sqrt(q)`` using a ``2**-p`` wide root."""
    h = heron_rat(q, n)
    root = sqrt_bounds(q, p)
    return Enclosure(h - root.hi, h - root.lo)
