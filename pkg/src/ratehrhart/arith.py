"""Exact rational scalars and the integer-part toolkit.

``fractions.Fraction`` is the rational type throughout the package: it is
always stored in lowest terms with a positive denominator, and ``0`` is
``0/1``.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import DomainError, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[-−]?[0-9]+(/[0-9]+)?$")


class Free:
    """Scale requirement met at every positive scale, so no minimum exists."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "FREE"

    def __str__(self):
        return "free"

    def __reduce__(self):
        return (Free, ())


FREE = Free()

ScaleRequirement = Union[Fraction, Free]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str, line: int | None = None) -> Fraction:
    """Parse ``p/q`` or ``p`` with an optional leading minus sign."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"malformed rational {text!r}", line)
    s = s.replace("−", "-")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}", line)
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def floor(x: Fraction) -> int:
    return math.floor(x)


def ceil(x: Fraction) -> int:
    return math.ceil(x)


def frac(x: Fraction) -> Fraction:
    """Fractional part ``x - floor(x)``, always in ``[0, 1)``."""
    x = as_rational(x)
    return x - math.floor(x)


def rat_lcm(a: Fraction, b: Fraction) -> Fraction:
    """Smallest positive rational that is an integer multiple of both a and b."""
    a, b = as_rational(a), as_rational(b)
    if a <= 0 or b <= 0:
        raise DomainError(f"rat_lcm needs positive arguments, got {a}, {b}")
    return Fraction(math.lcm(a.numerator, b.numerator),
                    math.gcd(a.denominator, b.denominator))


def lcm_scales(scales: Iterable[ScaleRequirement]) -> ScaleRequirement:
    """Aggregate per-face scale requirements; ``FREE`` entries impose nothing."""
    finite = [s for s in scales if s is not FREE]
    if not finite:
        return FREE
    return reduce(rat_lcm, finite)


def min_scale_point(v: Sequence[Fraction], n: int | None = None) -> ScaleRequirement:
    """Smallest r > 0 with r*v integral.

    Every admissible r is an integer multiple of the returned value.  The zero
    vector is integral at every scale, which is reported as ``FREE``.
    """
    v = [as_rational(x) for x in v]
    if n is not None and len(v) != n:
        raise DomainError(f"expected a point in dimension {n}, got {len(v)} coordinates")
    if all(x == 0 for x in v):
        return FREE
    d = math.lcm(*(x.denominator for x in v))
    g = math.gcd(*(int(x * d) for x in v))
    return Fraction(d, g)
