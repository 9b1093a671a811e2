"""Exact real arithmetic on signed-digit streams over [-1, 1]."""

from .heron import heron_seq, iota, poslog, sqrt_stream, sqrt_stream_fast
from .limit import Region, classify, limit
from .oracle import Enclosure, embed, enclosure, heron_rat, parse_rational, sqrt_bounds
from .render import decimal_approx, format_digits, parse_digits
from .stream import SDStream, cons, constant, prefix, prefix_value, uncons
from .transforms import (
    average,
    divide,
    double,
    minus_one,
    negate,
    plus_one,
    q_minus,
    q_plus,
)

__all__ = [
    "Enclosure", "Region", "SDStream", "average", "classify", "cons", "constant",
    "decimal_approx", "divide", "double", "embed", "enclosure", "format_digits",
    "heron_rat", "heron_seq", "iota", "limit", "minus_one", "negate", "parse_digits",
    "parse_rational", "plus_one", "poslog", "prefix", "prefix_value", "q_minus",
    "q_plus", "sqrt_bounds", "sqrt_stream", "sqrt_stream_fast", "uncons",
]
