"""Rational Ehrhart quasi-polynomials.

``Q(P, r) = #(rP ∩ Z^n) = sum_i Q_i(P, r) r**i`` for rational ``r >= 0``.

There are two ways to get at the coefficients.  The exact-point path,
:func:`eval_Qi`, reduces ``r = a/b`` to the classical quasi-polynomial of
``(1/b)P`` at ``a`` and works everywhere, breakpoints included.  The
structural path, :func:`compute_piecewise`, recovers every ``Q_i`` as an
explicit polynomial on each open interval between consecutive breakpoints of
one period ``q(P)``.  The two paths share nothing but :func:`count`, so their
agreement is a real check.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .arith import FREE, as_rational, format_rational
from .counting import count, count_interior
from .ehrhart import compute_ehrhart, interpolate
from .errors import (AtBreakpoint, FreeIndex, NotFullDimensional,
                     ValidationFailed, DomainError)
from .polytope import (Polytope, denominator, integer_i_index,
                       rational_denominator, rational_i_index, scale)

# -- polynomial helpers (coefficient tuples, low degree first) ----------


def poly_eval(c: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def poly_derivative(c: Sequence[Fraction]) -> tuple:
    return tuple(i * a for i, a in enumerate(c))[1:]


def poly_trim(c: Sequence[Fraction]) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def format_poly(coeffs, var="r") -> str:
    """Human-readable polynomial, e.g. ``1 - 2*r + r^2``; exact p/q coefficients."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


# -- exact-point path ---------------------------------------------------


def _require_full(P: Polytope):
    if not P.is_full_dimensional:
        raise NotFullDimensional("rational Ehrhart coefficients need a full-dimensional polytope")


@lru_cache(maxsize=16384)
def rational_coefficients(P: Polytope, a: int, b: int) -> tuple:
    """``(Q_0, ..., Q_n)`` at ``a/b`` as ``G_i((1/b)P, a) * b**i``.

    ``a/b`` need not be reduced and ``a`` may be negative; the classical
    coefficients are extended to negative arguments by periodicity.
    """
    _require_full(P)
    if b <= 0:
        raise DomainError("denominator must be positive")
    period = b * denominator(P)
    qp = compute_ehrhart(scale(P, Fraction(1, b)), period, residues=[a])
    g = qp.coeffs[a % period]
    return tuple(gi * b ** i for i, gi in enumerate(g))


def eval_Qi(P: Polytope, i: int, r) -> Fraction:
    r = as_rational(r)
    if not 0 <= i <= P.ambient_dim:
        raise DomainError(f"coefficient index {i} out of range 0..{P.ambient_dim}")
    return rational_coefficients(P, r.numerator, r.denominator)[i]


def eval_Q(P: Polytope, r) -> Fraction:
    r = as_rational(r)
    qs = rational_coefficients(P, r.numerator, r.denominator)
    return sum((qi * r ** i for i, qi in enumerate(qs)), Fraction(0))


# -- breakpoints and piecewise recovery ---------------------------------


def facet_scale(offset: Fraction):
    """Smallest r > 0 putting ``r*{a.x = offset}`` through integer points.

    The normal is primitive, so this only depends on the offset; offset 0
    gives ``FREE``.
    """
    c = as_rational(offset)
    if c == 0:
        return FREE
    return Fraction(c.denominator, abs(c.numerator))


def breakpoints(P: Polytope) -> tuple:
    """All possible jumps of ``Q(P, .)`` in ``[0, q(P)]``, sorted."""
    _require_full(P)
    q = rational_denominator(P)
    pts = {Fraction(0), q}
    for h in P.halfspaces:
        alpha = facet_scale(h.offset)
        if alpha is FREE:
            continue
        k = 1
        while k * alpha <= q:
            pts.add(k * alpha)
            k += 1
    return tuple(sorted(pts))


@dataclass(frozen=True)
class PiecewiseQP:
    """Coefficients ``Q_j`` as polynomials on each open interval of a period.

    ``pieces[m][j]`` gives the coefficients (low degree first, length
    ``n - j + 1``) of ``Q_j`` on ``(breakpoints[m], breakpoints[m + 1])`` as a
    polynomial in the reduced argument ``r mod period``.  ``anchors[m]`` are
    the constants ``A_i`` with ``Q(P, x + k*period) = sum_i A_i (k*period)**i``.
    """

    dimension: int
    period: Fraction
    breakpoints: tuple
    pieces: tuple
    anchors: tuple = field(default=())

    @property
    def intervals(self):
        return list(zip(self.breakpoints[:-1], self.breakpoints[1:]))

    def locate(self, r) -> tuple:
        """``(interval index, reduced argument)`` for an off-breakpoint r."""
        r = as_rational(r)
        x = r - math.floor(r / self.period) * self.period
        pos = bisect.bisect_left(self.breakpoints, x)
        if pos < len(self.breakpoints) and self.breakpoints[pos] == x:
            raise AtBreakpoint(f"{r} reduces to the breakpoint {x}")
        return pos - 1, x


def _pieces_from_anchors(A: Sequence[Fraction], n: int) -> tuple:
    return tuple(
        tuple(math.comb(i + j, j) * A[i + j] * (-1) ** i for i in range(n - j + 1))
        for j in range(n + 1)
    )


def compute_piecewise(P: Polytope) -> PiecewiseQP:
    """Recover every ``Q_j(P, .)`` as a piecewise polynomial.

    On an interval with midpoint x the counts at ``x + k*q`` (k = 0..n) are a
    degree-n polynomial in ``k*q``; its coefficients are the anchors, and the
    pieces follow by the binomial expansion around ``r - x``.  Each interval
    is re-checked at its one-third point, at k = 0 and at a fresh k = n + 1.
    """
    _require_full(P)
    n = P.ambient_dim
    q = rational_denominator(P)
    bps = breakpoints(P)
    pieces, anchors = [], []
    for lo, hi in zip(bps[:-1], bps[1:]):
        mid = (lo + hi) / 2
        A = interpolate([(k * q, count(P, mid + k * q)) for k in range(n + 1)])
        pcs = _pieces_from_anchors(A, n)
        x = lo + (hi - lo) / 3
        qx = [poly_eval(p, x) for p in pcs]
        for k in (0, n + 1):
            r = x + k * q
            got = sum((v * r ** j for j, v in enumerate(qx)), Fraction(0))
            if got != count(P, r):
                raise ValidationFailed(
                    f"piece on ({lo}, {hi}) predicts {got} at r={r}, count is {count(P, r)}")
        pieces.append(pcs)
        anchors.append(tuple(A))
    return PiecewiseQP(n, q, bps, tuple(pieces), tuple(anchors))


def eval_piecewise(pw: PiecewiseQP, i: int, r) -> Fraction:
    """``Q_i(P, r)`` from the piecewise table; r must avoid breakpoints mod the period."""
    m, x = pw.locate(r)
    return poly_eval(pw.pieces[m][i], x)


# -- verification -------------------------------------------------------


def derivative_violations(pw: PiecewiseQP) -> list:
    """Intervals and indices where ``Q_j' != -(j+1) Q_{j+1}`` as polynomials."""
    bad = []
    for m, pcs in enumerate(pw.pieces):
        for j in range(pw.dimension):
            lhs = poly_trim(poly_derivative(pcs[j]))
            rhs = poly_trim(tuple(-(j + 1) * a for a in pcs[j + 1]))
            if lhs != rhs:
                bad.append((m, j, lhs, rhs))
    return bad


def check_derivative(pw: PiecewiseQP) -> bool:
    return not derivative_violations(pw)


def reciprocity_sides(P: Polytope, r) -> tuple:
    """``(#(r int P ∩ Z^n), (-1)**n Q(P, -r))`` with Q_i shifted by q(P) into r >= 0."""
    r = as_rational(r)
    n = P.ambient_dim
    lhs = count_interior(P, r)
    q = rational_denominator(P)
    arg = -r + math.ceil(r / q) * q
    qs = [eval_Qi(P, i, arg) for i in range(n + 1)]
    rhs = (-1) ** n * sum((qi * (-r) ** i for i, qi in enumerate(qs)), Fraction(0))
    return lhs, rhs


def check_reciprocity(P: Polytope, r) -> bool:
    lhs, rhs = reciprocity_sides(P, r)
    return lhs == rhs


def period_violations(P: Polytope, i: int, samples: Iterable) -> list:
    """Samples where shifting by rd_i(P) or d_i(P) changes ``Q_i``."""
    rd = rational_i_index(P, i)
    if rd is FREE:
        raise FreeIndex(f"rd_{i} is free; no period to check")
    d = integer_i_index(P, i)
    bad = []
    for r in samples:
        r = as_rational(r)
        base = eval_Qi(P, i, r)
        for p in (rd, Fraction(d)):
            shifted = eval_Qi(P, i, r + p)
            if shifted != base:
                bad.append((r, p, base, shifted))
    return bad


def check_periods(P: Polytope, i: int, samples: Iterable) -> bool:
    return not period_violations(P, i, samples)


def dilation_sides(P: Polytope, s, r, i: int) -> tuple:
    """``(Q_i(sP, r), Q_i(P, s r) s**i)``."""
    s, r = as_rational(s), as_rational(r)
    return eval_Qi(scale(P, s), i, r), eval_Qi(P, i, s * r) * s ** i


def check_dilation_identity(P: Polytope, s, r, i: int) -> bool:
    lhs, rhs = dilation_sides(P, s, r, i)
    return lhs == rhs


@dataclass
class PeriodFalsification:
    period: object
    witnesses: dict

    @property
    def missing(self):
        return [s for s, w in self.witnesses.items() if w is None]

    @property
    def all_found(self) -> bool:
        return not self.missing


def falsify_smaller_period(P: Polytope, candidates: Sequence | None = None,
                           samples: Sequence | None = None) -> PeriodFalsification:
    """Look for sample points showing each candidate is not a period of Q_{n-1}.

    A candidate without a witness is only reported; that is not a proof that
    it is a period.
    """
    _require_full(P)
    n = P.ambient_dim
    rd = rational_i_index(P, n - 1)
    if candidates is None:
        if rd is FREE:
            raise FreeIndex(f"rd_{n - 1} is free; pass explicit candidates")
        candidates = [rd / k for k in range(2, 7)]
    if samples is None:
        span = rd if rd is not FREE else rational_denominator(P)
        samples = [span * j / 48 for j in range(48)]
    witnesses = {}
    for s in candidates:
        s = as_rational(s)
        witnesses[s] = None
        for r in samples:
            r = as_rational(r)
            if eval_Qi(P, n - 1, r + s) != eval_Qi(P, n - 1, r):
                witnesses[s] = r
                break
    return PeriodFalsification(rd, witnesses)
