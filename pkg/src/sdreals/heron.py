"""Square roots via Heron's method and the limit operator."""

from __future__ import annotations

from .limit import Modulus, StreamSeq, limit, memoized
from .stream import SDStream, constant
from .transforms import average, divide

ZEROS = constant(0)
ONES = constant(1)

MAX_PEEL_DEPTH = 4096


class SqrtDepthExceeded(RecursionError):
    """Too many consecutive ``00`` peels; the input is (or is nearly) zero."""


def heron_seq(v: SDStream) -> StreamSeq:
    """Heron iterates ``h(0) = 1``, ``h(n+1) = (h(n) + v/h(n)) / 2`` as streams.

    Requires ``val(v) >= 1/16`` so that every divisor is at least 1/4.
    Iterates are memoized, so ``h(n)`` is built once per sequence.
    """

    def step(n: int) -> SDStream:
        if n == 0:
            return ONES
        prev = seq(n - 1)
        return average(prev, divide(v, prev))

    seq = memoized(step)
    return seq


def iota() -> Modulus:
    return lambda p: p


def auxlog(p: int, n: int) -> int:
    while p > 1 << n:
        n += 1
    return n


def poslog(p: int) -> int:
    """Least ``n`` with ``p <= 2**n``."""
    if p < 1:
        raise ValueError(f"poslog needs a positive integer, got {p}")
    return auxlog(p, 0)


def sqrt_stream(s: SDStream, *, max_depth: int = MAX_PEEL_DEPTH) -> SDStream:
    """Stream of ``sqrt(x)`` for ``x >= 0``, using the modulus ``p -> p``."""
    return _sqrt(s, iota(), max_depth, 0)


def sqrt_stream_fast(s: SDStream, *, max_depth: int = MAX_PEEL_DEPTH) -> SDStream:
    """As :func:`sqrt_stream`, with ``poslog`` as modulus in the Heron branch."""
    return _sqrt(s, poslog, max_depth, 0)


def _sqrt(s: SDStream, modulus: Modulus, max_depth: int, depth: int) -> SDStream:
    if depth > max_depth:
        raise SqrtDepthExceeded(
            f"{depth} leading zero pairs peeled; is the radicand zero or negative?"
        )
    d1 = s.head
    if d1 == -1:
        return ZEROS
    t = s.tail
    d2 = t.head
    if d1 == 0 and d2 == -1:
        return ZEROS
    if d1 == 0 and d2 == 0:
        rest = t.tail
        return SDStream(0, lambda: _sqrt(rest, modulus, max_depth, depth + 1))
    d3 = t.tail.head
    if (d1, d2, d3) in ((0, 1, -1), (1, -1, -1)):
        rest = SDStream(1, t.tail.tail)
        return SDStream(0, lambda: _sqrt(rest, modulus, max_depth, depth + 1))
    return limit(modulus, heron_seq(s))
