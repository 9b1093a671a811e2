import itertools
from fractions import Fraction

import pytest

from helpers import enclosures, first_miss, random_rationals
from sdreals.limit import REGION_PREFIXES, Region, classify, limit, memoized
from sdreals.oracle import embed
from sdreals.stream import SDStream, constant, digits_value, from_digits
from sdreals.transforms import double, q_minus, q_plus

F = Fraction
EIGHTH = F(1, 8)
QUARTER = F(1, 4)


def test_classify_examples():
    u = constant(-1)
    assert classify(from_digits([1, 1], u)) is Region.R
    assert classify(from_digits([0, 0], u)) is Region.MID
    s = embed(F(-1, 2))
    assert classify(s) is Region.L
    assert first_miss(s, F(-1, 2), 3) is None


def _matching_prefixes(triple):
    return [
        (region, p)
        for region, prefixes in REGION_PREFIXES.items()
        for p in prefixes
        if tuple(triple[: len(p)]) == p
    ]


@pytest.mark.parametrize("triple", list(itertools.product((-1, 0, 1), repeat=3)))
def test_partition_and_value_soundness(triple):
    matches = _matching_prefixes(triple)
    assert len(matches) == 1
    region, p = matches[0]
    for tail in (-1, 0, 1):
        assert classify(from_digits(triple, constant(tail))) is region
    # every stream starting with p has its value in [mid - w, mid + w]
    mid, w = digits_value(p), F(1, 2 ** len(p))
    lo, hi = mid - w, mid + w
    if region is Region.R:
        assert lo >= EIGHTH
    elif region is Region.L:
        assert hi <= -EIGHTH
    else:
        assert -QUARTER <= lo and hi <= QUARTER


def test_classify_reads_at_most_three_digits():
    def boom():
        raise AssertionError("fourth digit forced")

    s = SDStream(0, SDStream(1, SDStream(1, boom)))
    assert classify(s) is Region.R


def test_region_soundness_on_embedded_rationals():
    for r in random_rationals(300, seed=40):
        region = classify(embed(r))
        if region is Region.R:
            assert r >= EIGHTH
        elif region is Region.L:
            assert r <= -EIGHTH
        else:
            assert abs(r) <= QUARTER


@pytest.mark.parametrize("q", [F(-1, 2), F(0), F(3, 8)])
def test_constant_sequence_limit(q):
    s = embed(q)
    assert q in enclosures(limit(lambda p: 0, lambda n: s), 16)[-1]


def _approaching(q):
    return lambda n: embed(min(F(1), max(F(-1), q - F(1, 2 ** (n + 1)))))


def test_limit_of_increasing_sequence():
    out = limit(lambda p: p, _approaching(F(1, 2)))
    assert F(1, 2) in enclosures(out, 10)[-1]


def _alternating(q):
    def seq(n):
        x = q + (-1) ** n * F(1, 2 ** (n + 1))
        return embed(min(F(1), max(F(-1), x)))
    return seq


@pytest.mark.parametrize("shift", ["max", "plus"])
def test_limit_correctness(shift):
    for q in random_rationals(30, seed=41):
        for seq in (_approaching(q), _alternating(q)):
            assert first_miss(limit(lambda p: p, seq, shift), q, 24) is None, q


def test_limit_with_slow_modulus():
    # |f(n) - q| <= 2**-(n // 2), so M(p) = 2p is a valid modulus
    q = F(-2, 7)

    def seq(n):
        return embed(q + F(1, 2 ** (n // 2 + 2)))

    assert first_miss(limit(lambda p: 2 * p, seq), q, 20) is None


def test_branch_preconditions_hold():
    """Replay the corecursion on rational values and check each transform's domain."""
    for q in random_rationals(20, seed=42):
        values = lambda n, q=q: min(F(1), max(F(-1), q + (-1) ** n * F(1, 2 ** (n + 1))))
        streams = memoized(lambda n, values=values: embed(values(n)))
        modulus = lambda p: p
        for _ in range(12):
            m = modulus(4)
            region = classify(streams(m))
            for n in range(40):
                x = values(max(m, n))
                if region is Region.R:
                    assert 0 <= x <= 1
                    assert abs(x / 2 - QUARTER) <= QUARTER
                elif region is Region.L:
                    assert -1 <= x <= 0
                    assert abs(x / 2 + QUARTER) <= QUARTER
                else:
                    assert abs(x) <= F(1, 2)
            if region is Region.R:
                values = lambda n, v=values, m=m: 2 * v(max(m, n)) - 1
                streams = memoized(lambda n, s=streams, m=m: double(double(q_minus(s(max(m, n))))))
            elif region is Region.L:
                values = lambda n, v=values, m=m: 2 * v(max(m, n)) + 1
                streams = memoized(lambda n, s=streams, m=m: double(double(q_plus(s(max(m, n))))))
            else:
                values = lambda n, v=values, m=m: 2 * v(max(m, n))
                streams = memoized(lambda n, s=streams, m=m: double(s(max(m, n))))
            modulus = lambda p, mod=modulus: mod(p + 1)


def test_unknown_seq_shift():
    with pytest.raises(ValueError):
        limit(lambda p: 0, lambda n: constant(0), "min")


def test_memoized_sequence_builds_each_term_once():
    calls = []

    def seq(n):
        calls.append(n)
        return constant(0)

    cached = memoized(seq)
    assert cached(3) is cached(3)
    assert calls == [3]
