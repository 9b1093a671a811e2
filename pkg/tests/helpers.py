import random
from fractions import Fraction

from sdreals.ops import encloses_sqrt
from sdreals.oracle import Enclosure
from sdreals.stream import digits_value, prefix


def enclosures(s, nmax):
    """Enclosures at depths 1..nmax from a single forced prefix."""
    ds = prefix(s, nmax)
    out = []
    for n in range(1, nmax + 1):
        v = digits_value(ds[:n])
        eps = Fraction(1, 2**n)
        out.append(Enclosure(v - eps, v + eps))
    return out


def first_miss(s, target, nmax=24):
    """Smallest depth whose enclosure misses ``target`` (None if all contain it)."""
    for n, enc in enumerate(enclosures(s, nmax), start=1):
        if target not in enc:
            return n
    return None


def first_sqrt_miss(s, q, nmax=24):
    for n, enc in enumerate(enclosures(s, nmax), start=1):
        if not encloses_sqrt(enc, q):
            return n
    return None


def random_rationals(count, lo=-1, hi=1, seed=0, max_den=4096):
    """Deterministic rationals in [lo, hi] with mixed (not only dyadic) denominators."""
    rng = random.Random(seed)
    lo, hi = Fraction(lo), Fraction(hi)
    out = []
    while len(out) < count:
        den = rng.randint(1, max_den)
        num = rng.randint(-den, den)
        q = Fraction(num, den)
        if lo <= q <= hi:
            out.append(q)
    return out


ACCEPTANCE_LOG = []


def report(criterion, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}"
    ACCEPTANCE_LOG.append(line)
    print(line)
