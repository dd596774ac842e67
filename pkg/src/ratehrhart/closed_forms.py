"""Closed forms in the plane.

The triangle family ``T = conv(0, (s1/t1 * a/b, a/b), (s2/t2 * a/b, a/b))``
has explicit rational Ehrhart coefficients; so do its two slanted edges and
the triangles ``T_alpha``.  :func:`check_Q1_bound` samples the inequality
``|Q_1(P, r)| <= Q_1(P, 0)`` for arbitrary polygons.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .arith import as_rational, frac
from .errors import InvalidParams, NotDimensionTwo
from .polytope import Polytope, build_polygon, rational_denominator
from .rational import eval_Qi


@dataclass(frozen=True)
class TriangleParams:
    a: int
    b: int
    t1: int
    t2: int
    s1: int
    s2: int

    def __post_init__(self):
        if min(self.a, self.b, self.t1, self.t2) <= 0:
            raise InvalidParams("a, b, t1, t2 must be positive")
        if math.gcd(self.a, self.b) != 1:
            raise InvalidParams("gcd(a, b) must be 1")
        if math.gcd(self.s1, self.t1) != 1 or math.gcd(self.s2, self.t2) != 1:
            raise InvalidParams("gcd(s1, t1) and gcd(s2, t2) must be 1")
        if Fraction(self.s2, self.t2) <= Fraction(self.s1, self.t1):
            raise InvalidParams("need s2/t2 > s1/t1")

    @property
    def height(self) -> Fraction:
        return Fraction(self.a, self.b)

    @property
    def width(self) -> Fraction:
        """``s2/t2 - s1/t1``, the top edge length of the unit-height triangle."""
        return Fraction(self.s2, self.t2) - Fraction(self.s1, self.t1)

    @property
    def l(self) -> int:
        return math.lcm(self.t1, self.t2)

    def vertices(self):
        h = self.height
        return [(Fraction(0), Fraction(0)),
                (Fraction(self.s1, self.t1) * h, h),
                (Fraction(self.s2, self.t2) * h, h)]

    def polygon(self) -> Polytope:
        return build_polygon(self.vertices())


def triangle_Q2(p: TriangleParams) -> Fraction:
    return Fraction(1, 2) * p.height ** 2 * p.width


def triangle_Q1(p: TriangleParams, r) -> Fraction:
    r = as_rational(r)
    f = frac(p.a * r / p.b)
    return p.height * (Fraction(p.t1 + p.t2, 2 * p.t1 * p.t2) - (f - Fraction(1, 2)) * p.width)


def triangle_Q0(p: TriangleParams, r) -> Fraction:
    r = as_rational(r)
    ar_b = p.a * r / p.b
    f = frac(ar_b)
    w = p.width
    l = p.l
    value = 1 - Fraction(1, 2) * f * (w + 2) + Fraction(1, 2) * f ** 2 * w
    value += frac(ar_b / l) * l * (Fraction(p.t2 - 1, 2 * p.t2) + Fraction(p.t1 - 1, 2 * p.t1))
    upper = math.floor(ar_b) % l
    for i in range(upper + 1):
        x2 = Fraction(p.s2 * i, p.t2)
        x1 = Fraction(p.s1 * i, p.t1)
        value -= x2 - math.floor(x2) + math.ceil(x1) - x1
    return value


def triangle_Q(p: TriangleParams, r) -> Fraction:
    r = as_rational(r)
    return triangle_Q2(p) * r ** 2 + triangle_Q1(p, r) * r + triangle_Q0(p, r)


def segment_coeffs(i: int, p: TriangleParams, r) -> tuple:
    """``(Q_1, Q_0)`` of the edge from the origin to ``(a/b)(s_i/t_i, 1)``."""
    if i not in (1, 2):
        raise InvalidParams("segment index must be 1 or 2")
    t = p.t1 if i == 1 else p.t2
    r = as_rational(r)
    x = p.a * r / (p.b * t)
    return Fraction(p.a, p.b * t), 1 - (x - math.floor(x))


def talpha_polygon(alpha: int) -> Polytope:
    return build_polygon([(0, 0), (Fraction(alpha - 1, alpha), 1), (Fraction(alpha + 1, alpha), 1)])


def talpha_Q0(alpha: int, m: int, k: int, rt) -> Fraction:
    """``Q_0(T_alpha, m*alpha + k + rt)`` for ``0 <= k < alpha`` and ``0 <= rt < 1``."""
    rt = as_rational(rt)
    if alpha < 2:
        raise InvalidParams("alpha must be at least 2")
    if m < 0 or not 0 <= k < alpha or not 0 <= rt < 1:
        raise InvalidParams("need m >= 0, 0 <= k < alpha and 0 <= rt < 1")
    return Fraction(1, alpha) * (k * (alpha - k - 2) + rt ** 2 - 2 * rt) + 1


@dataclass
class BoundReport:
    q1_at_zero: Fraction
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_Q1_bound(P: Polytope, samples: Iterable | None = None,
                   params: TriangleParams | None = None) -> BoundReport:
    """Check ``|Q_1(P, r)| <= Q_1(P, 0)`` on samples from ``[0, q(P))``.

    With ``params`` the triangle's sharper lower bound
    ``Q_1(T, r) >= -Q_1(T, 0) + Q_1(g_1, r) + Q_1(g_2, r)`` is checked too.
    Violations are recorded as ``(kind, r, value, bound)``.
    """
    if P.ambient_dim != 2 or not P.is_full_dimensional:
        raise NotDimensionTwo("the Q_1 bound is for 2-dimensional polygons")
    q1_0 = eval_Qi(P, 1, 0)
    if samples is None:
        q = rational_denominator(P)
        samples = [q * j / 20 for j in range(20)]
    report = BoundReport(q1_0)
    for r in samples:
        r = as_rational(r)
        v = eval_Qi(P, 1, r)
        report.checked += 1
        if abs(v) > q1_0:
            report.violations.append(("abs", r, v, q1_0))
        if params is not None:
            lower = -q1_0 + segment_coeffs(1, params, r)[0] + segment_coeffs(2, params, r)[0]
            if v < lower:
                report.violations.append(("lower", r, v, lower))
    return report
