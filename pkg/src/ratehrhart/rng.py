"""Reproducible sampling: a 64-bit LCG and random rational polygons.

The generator is ``x <- (6364136223846793005 * x + 1442695040888963407) mod 2**64``
(Knuth's MMIX constants).  Outputs take the top 32 bits of the state, so the
same seed gives the same stream in any language with 64-bit integers.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import CollinearAll, DuplicateVertex, NonConvex

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


class LCG64:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK

    def next_u32(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Integer in ``[lo, hi]`` (modulo bias is irrelevant at these ranges)."""
        return lo + self.next_u32() % (hi - lo + 1)

    def rational(self, lo, hi, max_den: int) -> Fraction:
        """Rational in ``[lo, hi]`` with denominator at most ``max_den``."""
        q = self.randint(1, max_den)
        p = self.randint(math.ceil(Fraction(lo) * q), math.floor(Fraction(hi) * q))
        return Fraction(p, q)

    def fraction_in_unit(self, max_den: int) -> Fraction:
        """Rational in ``[0, 1)`` with denominator at most ``max_den``."""
        q = self.randint(1, max_den)
        return Fraction(self.randint(0, q - 1), q)


def random_polygon(rng: LCG64, max_vertices: int = 6, max_den: int = 6, bound: int = 3,
                   max_tries: int = 100000):
    """Rejection-sample a convex polygon with rational vertices in ``[-bound, bound]**2``."""
    from .polytope import build_polygon

    for _ in range(max_tries):
        m = rng.randint(3, max_vertices)
        pts = [(rng.rational(-bound, bound, max_den), rng.rational(-bound, bound, max_den))
               for _ in range(m)]
        try:
            return build_polygon(pts)
        except (NonConvex, DuplicateVertex, CollinearAll):
            continue
    raise RuntimeError("failed to sample a convex polygon")
