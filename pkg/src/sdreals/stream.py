"""Lazy, memoized signed-digit streams.

A stream ``d1 d2 d3 ...`` with digits in {-1, 0, 1} denotes the real
``sum(d_i * 2**-i)`` in [-1, 1].  Each cell holds a strict head digit and a
deferred tail that is evaluated at most once per observer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator

DIGITS = (-1, 0, 1)

_UNSET = object()


def check_digit(d: int) -> int:
    if d not in DIGITS or isinstance(d, bool):
        raise ValueError(f"signed digit must be -1, 0 or 1, got {d!r}")
    return int(d)


class SDStream:
    """An immutable infinite stream of signed digits.

    The tail is given either as a stream or as a zero-argument callable
    producing one.  A callable tail is forced on first access and cached.
    Concurrent first access may evaluate the thunk twice; thunks are pure,
    so both results are digitwise identical and the first stored one wins.
    """

    __slots__ = ("head", "_tail", "_thunk")

    def __init__(self, head: int, tail: "SDStream | Callable[[], SDStream]"):
        self.head = check_digit(head)
        if isinstance(tail, SDStream):
            self._tail = tail
            self._thunk = None
        else:
            self._tail = _UNSET
            self._thunk = tail

    @property
    def tail(self) -> "SDStream":
        t = self._tail
        if t is _UNSET:
            thunk = self._thunk
            if thunk is None:  # another thread finished in between
                return self._tail
            t = thunk()
            if not isinstance(t, SDStream):
                raise TypeError(f"stream tail thunk returned {type(t).__name__}")
            if self._tail is _UNSET:
                self._tail = t
                self._thunk = None
            t = self._tail
        return t

    def __iter__(self) -> Iterator[int]:
        s = self
        while True:
            yield s.head
            s = s.tail

    def __repr__(self) -> str:
        shown = []
        s = self
        for _ in range(8):
            shown.append(s.head)
            if s._tail is _UNSET:
                break
            s = s._tail
        return f"SDStream({shown}...)"


def cons(d: int, s: "SDStream | Callable[[], SDStream]") -> SDStream:
    """Prepend digit ``d``; the value becomes ``(d + val(s)) / 2``."""
    return SDStream(d, s)


def uncons(s: SDStream) -> tuple[int, SDStream]:
    return s.head, s.tail


def constant(d: int) -> SDStream:
    """The stream ``d d d ...`` of value ``d``, as a single self-referencing cell."""
    cell = SDStream(d, lambda: cell)
    cell.tail
    return cell


def from_digits(digits, rest: SDStream | None = None) -> SDStream:
    """Build ``d1 d2 ... dn rest`` (``rest`` defaults to zeros)."""
    s = constant(0) if rest is None else rest
    for d in reversed(list(digits)):
        s = SDStream(d, s)
    return s


def prefix(s: SDStream, n: int) -> list[int]:
    """Force and return the first ``n`` digits."""
    if n < 0:
        raise ValueError("prefix length must be non-negative")
    out = []
    for _ in range(n):
        out.append(s.head)
        if len(out) < n:
            s = s.tail
    return out


def drop(s: SDStream, n: int) -> SDStream:
    for _ in range(n):
        s = s.tail
    return s


def digits_value(digits) -> Fraction:
    """Exact value ``sum(d_i * 2**-i)`` of a finite digit list."""
    num = 0
    for d in digits:
        num = 2 * num + d
    return Fraction(num, 1 << len(digits))


def prefix_value(s: SDStream, n: int) -> Fraction:
    return digits_value(prefix(s, n))
