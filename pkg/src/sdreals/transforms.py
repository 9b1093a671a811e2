"""Digit-level operators on signed-digit streams.

``plus_one``, ``minus_one``, ``double``, ``q_plus`` and ``q_minus`` follow
fixed rewrite rules on the leading digit.  ``average`` is a carry-save
corecursion and ``divide`` selects quotient digits from exact rational
enclosures of its operands.
"""

from __future__ import annotations

from .stream import SDStream, constant

ONES = constant(1)
MINUS_ONES = constant(-1)

DIVIDE_LOOKAHEAD_CAP = 64


class DivisionStalled(ArithmeticError):
    """Raised when a quotient digit cannot be decided within the lookahead cap.

    This only happens when ``|a| <= b`` or ``b >= 1/4`` is violated.
    """


def plus_one(s: SDStream) -> SDStream:
    """Stream of ``x + 1``, correct when ``x <= 0``.

    Rules: ``-1 v -> 1 v``, ``0 v -> 1 (plus_one v)``, ``1 v -> 1 1 1 ...``.
    """
    d = s.head
    if d == -1:
        return SDStream(1, lambda: s.tail)
    if d == 0:
        return SDStream(1, lambda: plus_one(s.tail))
    return ONES


def minus_one(s: SDStream) -> SDStream:
    """Stream of ``x - 1``, correct when ``x >= 0``; mirror image of :func:`plus_one`."""
    d = s.head
    if d == 1:
        return SDStream(-1, lambda: s.tail)
    if d == 0:
        return SDStream(-1, lambda: minus_one(s.tail))
    return MINUS_ONES


def double(s: SDStream) -> SDStream:
    """Stream of ``2x``, correct when ``|x| <= 1/2``."""
    d = s.head
    if d == 0:
        return s.tail
    if d == 1:
        return plus_one(s.tail)
    return minus_one(s.tail)


def q_plus(s: SDStream) -> SDStream:
    """Stream of ``x/2 + 1/4``."""
    d = s.head
    first, second = {-1: (0, 0), 0: (0, 1), 1: (1, 0)}[d]
    return SDStream(first, lambda: SDStream(second, lambda: s.tail))


def q_minus(s: SDStream) -> SDStream:
    """Stream of ``x/2 - 1/4``."""
    d = s.head
    first, second = {-1: (-1, 0), 0: (0, -1), 1: (0, 0)}[d]
    return SDStream(first, lambda: SDStream(second, lambda: s.tail))


def negate(s: SDStream) -> SDStream:
    return SDStream(-s.head, lambda: negate(s.tail))


def _carry_digit(k: int) -> tuple[int, int]:
    # k in -6..6 -> (d, j) with k == 4d + j and j in -2..2
    d = -1 if k <= -3 else (1 if k >= 3 else 0)
    return d, k - 4 * d


def average(a: SDStream, b: SDStream) -> SDStream:
    """Stream of ``(x + y) / 2``.

    The state ``(j, u, v)`` with carry ``j`` in -2..2 denotes
    ``(j + val(u) + val(v)) / 4``.  The first carry is the sum of the two
    leading digits.
    """
    return _average_step(a.head + b.head, a.tail, b.tail)


def _average_step(j: int, u: SDStream, v: SDStream) -> SDStream:
    k = 2 * j + u.head + v.head
    d, carry = _carry_digit(k)
    assert -2 <= carry <= 2
    return SDStream(d, lambda: _average_step(carry, u.tail, v.tail))


class _Operand:
    """Incrementally read prefix of a stream: ``num / 2**k`` with ``k`` digits read."""

    __slots__ = ("num", "k", "rest")

    def __init__(self, num: int, k: int, rest: SDStream):
        self.num = num
        self.k = k
        self.rest = rest

    def refined(self) -> "_Operand":
        r = self.rest
        return _Operand(2 * self.num + r.head, self.k + 1, r.tail)


def divide(a: SDStream, b: SDStream) -> SDStream:
    """Stream of ``x / y`` for ``|x| <= y`` and ``y >= 1/4``.

    After ``n`` emitted digits with partial sum ``S`` (an integer scaled by
    ``2**n``) the residual ``z = 2**n * x/y - S`` lies in [-1, 1].  Operands
    are refined one digit at a time until the enclosure of ``z`` fits one of
    [0, 1], [-1/2, 1/2] or [-1, 0]; the largest digit that fits (1, then 0,
    then -1) keeps ``2z - d`` in [-1, 1].
    """
    return _divide_step(_Operand(0, 0, a), _Operand(0, 0, b), 0, 0)


def _quotient_bounds(x: _Operand, y: _Operand) -> tuple[int, int, int, int]:
    """Bounds ``lo_num/lo_den <= x/y <= hi_num/hi_den`` with positive denominators.

    Operand enclosures are clipped with the preconditions ``|x| <= 1`` and
    ``1/4 <= y <= 1``; all numerators are scaled by ``2**(k+2)``.
    """
    one = 4 << x.k
    xl = max(4 * (x.num - 1), -one)
    xh = min(4 * (x.num + 1), one)
    yl = max(4 * (y.num - 1), one >> 2)
    yh = min(4 * (y.num + 1), one)
    if yl > yh:
        raise DivisionStalled("divisor enclosure lies below 1/4")
    if xl >= 0:
        return xl, yh, xh, yl
    if xh <= 0:
        return xl, yl, xh, yh
    return xl, yl, xh, yl


def _select_digit(lo_num: int, lo_den: int, hi_num: int, hi_den: int) -> int | None:
    """Digit for a residual enclosed in ``[lo_num/lo_den, hi_num/hi_den]``."""
    if lo_num >= 0:
        return 1
    if 2 * lo_num >= -lo_den and 2 * hi_num <= hi_den:
        return 0
    if hi_num <= 0:
        return -1
    return None


def _divide_step(x: _Operand, y: _Operand, n: int, partial: int) -> SDStream:
    for _ in range(DIVIDE_LOOKAHEAD_CAP + 1):
        ln, ld, hn, hd = _quotient_bounds(x, y)
        # residual bounds (ln * 2**n - partial * ld) / ld, likewise for hi
        lo_num = (ln << n) - partial * ld
        hi_num = (hn << n) - partial * hd
        if lo_num > ld or hi_num < -hd:
            raise DivisionStalled(
                f"quotient left [-1, 1] at digit {n + 1}; is |x| <= y violated?"
            )
        d = _select_digit(lo_num, ld, hi_num, hd)
        if d is not None:
            nxt = 2 * partial + d
            return SDStream(d, lambda: _divide_step(x, y, n + 1, nxt))
        x, y = x.refined(), y.refined()
    raise DivisionStalled(
        f"no quotient digit after {DIVIDE_LOOKAHEAD_CAP} refinements at digit {n + 1}"
    )
