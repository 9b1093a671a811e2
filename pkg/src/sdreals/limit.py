"""Limits of convergent sequences of signed-digit streams."""

from __future__ import annotations

import enum
from typing import Callable

from .stream import SDStream
from .transforms import double, q_minus, q_plus

Modulus = Callable[[int], int]
StreamSeq = Callable[[int], SDStream]


class Region(enum.Enum):
    R = "R"
    MID = "Mid"
    L = "L"


# Prefixes of at most three digits; the lookup below is total over {-1,0,1}^3.
_R_PREFIXES = {(1, 1), (1, 0), (1, -1, 1), (1, -1, 0), (0, 1, 1), (0, 1, 0)}
_L_PREFIXES = {tuple(-d for d in p) for p in _R_PREFIXES}
_MID_PREFIXES = {(0, 0), (-1, 1, 1), (1, -1, -1), (0, 1, -1), (0, -1, 1)}

REGION_PREFIXES = {Region.R: _R_PREFIXES, Region.MID: _MID_PREFIXES, Region.L: _L_PREFIXES}


def classify(s: SDStream) -> Region:
    """Region of a stream from at most three leading digits.

    ``R`` guarantees a value >= 1/8, ``L`` a value <= -1/8 and ``MID`` an
    absolute value <= 1/4.
    """
    t = s.tail
    key = (s.head, t.head)
    region = _TWO_DIGIT.get(key)
    if region is None:
        region = _THREE_DIGIT[key + (t.tail.head,)]
    return region


_TWO_DIGIT = {p: r for r, ps in REGION_PREFIXES.items() for p in ps if len(p) == 2}
_THREE_DIGIT = {p: r for r, ps in REGION_PREFIXES.items() for p in ps if len(p) == 3}


def memoized(seq: StreamSeq) -> StreamSeq:
    cache: dict[int, SDStream] = {}

    def lookup(n: int) -> SDStream:
        s = cache.get(n)
        if s is None:
            s = cache.setdefault(n, seq(n))
        return s

    return lookup


def _shifted(modulus: Modulus) -> Modulus:
    return lambda p: modulus(p + 1)


def limit(modulus: Modulus, seq: StreamSeq, seq_shift: str = "max") -> SDStream:
    """Stream of the limit of ``seq``, given a modulus of convergence.

    ``modulus(p)`` must satisfy ``|seq(n) - x| <= 2**-p`` for all
    ``n >= modulus(p)``.  The next sequence reads ``seq(max(m, n))`` for
    ``seq_shift="max"`` or ``seq(m + n)`` for ``seq_shift="plus"``, where
    ``m = modulus(4)``.
    """
    if seq_shift not in ("max", "plus"):
        raise ValueError(f"seq_shift must be 'max' or 'plus', got {seq_shift!r}")
    return _limit_step(modulus, memoized(seq), seq_shift)


def _limit_step(modulus: Modulus, seq: StreamSeq, seq_shift: str) -> SDStream:
    m = modulus(4)
    region = classify(seq(m))
    if seq_shift == "max":
        index = lambda n: max(m, n)  # noqa: E731
    else:
        index = lambda n: m + n  # noqa: E731

    if region is Region.R:
        digit = 1
        nxt = lambda n: double(double(q_minus(seq(index(n)))))  # noqa: E731
    elif region is Region.L:
        digit = -1
        nxt = lambda n: double(double(q_plus(seq(index(n)))))  # noqa: E731
    else:
        digit = 0
        nxt = lambda n: double(seq(index(n)))  # noqa: E731
    return SDStream(
        digit, lambda: _limit_step(_shifted(modulus), memoized(nxt), seq_shift)
    )
