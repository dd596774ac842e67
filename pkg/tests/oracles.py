"""Independent brute-force oracles.

These deliberately avoid the code paths they are used to check: scans over
small rationals instead of lattice algebra, and per-point membership tests in
Fractions instead of the integer-threshold enumerator.
"""
import itertools
import math
from fractions import Fraction

from ratehrhart.linalg import rank


def small_rationals(limit):
    """All p/q with 1 <= p, q <= limit, ascending and without repeats."""
    return sorted({Fraction(p, q) for p in range(1, limit + 1) for q in range(1, limit + 1)})


def is_integral(v):
    return all(Fraction(x).denominator == 1 for x in v)


def scan_min_scale_point(v, limit=12):
    for r in small_rationals(limit):
        if is_integral([r * x for x in v]):
            return r
    return None


def meets_lattice(base, directions, r, reach=8):
    """Does ``r*(base + span(directions))`` contain an integer point near ``r*base``?"""
    centre = [r * x for x in base]
    n = len(base)
    dirs = [list(d) for d in directions]
    k = rank(dirs) if dirs else 0
    ranges = [range(math.floor(c) - reach, math.ceil(c) + reach + 1) for c in centre]
    for z in itertools.product(*ranges):
        diff = [zi - c for zi, c in zip(z, centre)]
        if all(x == 0 for x in diff):
            return True
        if dirs and rank(dirs + [diff]) == k:
            return True
    return False


def scan_min_scale_affine(base, directions, limit=12, reach=8):
    for r in small_rationals(limit):
        if meets_lattice(base, directions, r, reach):
            return r
    return None


def first_common_multiple(a, b, limit=200):
    """Smallest positive value that is an integer multiple of both a and b."""
    multiples_a = {k * a for k in range(1, limit)}
    for k in range(1, limit):
        if k * b in multiples_a:
            return k * b
    return None


def naive_count(P, r, strict=False):
    """Box scan testing ``z/r in P`` point by point."""
    r = Fraction(r)
    if r == 0:
        return 1
    n = P.ambient_dim
    lo = [math.floor(min(r * v[k] for v in P.vertices)) for k in range(n)]
    hi = [math.ceil(max(r * v[k] for v in P.vertices)) for k in range(n)]
    total = 0
    for z in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        x = [Fraction(c) / r for c in z]
        if all((h.value(x) < h.offset) if strict else (h.value(x) <= h.offset)
               for h in P.halfspaces):
            total += 1
    return total
