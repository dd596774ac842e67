"""Verification suites run by ``ratehrhart verify``.

Each suite returns :class:`CheckResult` lines.  Sample points come from the
seeded :class:`~ratehrhart.rng.LCG64`, so a given polytope, sample count and
seed always produce the same report.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import FREE
from .closed_forms import check_Q1_bound
from .ehrhart import coefficient, compute_ehrhart
from .errors import UnsupportedKind
from .polytope import (GENERAL, Polytope, rational_denominator,
                       rational_i_index, scale)
from .rational import (compute_piecewise, derivative_violations,
                       dilation_sides, period_violations, reciprocity_sides)
from .rng import LCG64, random_polygon

SUITES = ("reciprocity", "derivative", "dilation", "periods", "bound2d")

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def line(self) -> str:
        return f"{self.status} {self.name}" + (f": {self.detail}" if self.detail else "")


def sample_points(rng: LCG64, count: int, upper: Fraction, positive: bool = False,
                  max_den: int = 12) -> list:
    """``count`` rationals in ``[0, upper)``, or ``(0, upper]`` when positive."""
    out = []
    for _ in range(count):
        q = rng.randint(1, max_den)
        p = rng.randint(1, q) if positive else rng.randint(0, q - 1)
        out.append(upper * Fraction(p, q))
    return out


def verify_reciprocity(P: Polytope, rng: LCG64, samples: int) -> list:
    q = rational_denominator(P)
    for r in sample_points(rng, samples, 2 * q, positive=True):
        lhs, rhs = reciprocity_sides(P, r)
        if lhs != rhs:
            return [CheckResult("reciprocity", FAIL,
                                f"r={r} interior count {lhs} != (-1)^n Q(P,-r) = {rhs}")]
    return [CheckResult("reciprocity", PASS, f"{samples} samples")]


def verify_derivative(P: Polytope, pw=None) -> list:
    pw = compute_piecewise(P) if pw is None else pw
    bad = derivative_violations(pw)
    if bad:
        m, j, lhs, rhs = bad[0]
        lo, hi = pw.intervals[m]
        return [CheckResult("derivative", FAIL,
                            f"interval ({lo}, {hi}) j={j}: d/dr Q_{j} = {_p(lhs)} "
                            f"but -{j + 1} Q_{j + 1} = {_p(rhs)}")]
    return [CheckResult("derivative", PASS, f"{len(pw.pieces)} intervals")]


def _p(c):
    return "[" + ", ".join(str(x) for x in c) + "]"


def verify_dilation(P: Polytope, rng: LCG64, samples: int) -> list:
    n = P.ambient_dim
    q = rational_denominator(P)
    results = []
    bad = None
    for s in (Fraction(1, 2), Fraction(2), Fraction(3, 2)):
        for r in sample_points(rng, samples, 2 * q):
            i = rng.randint(0, n)
            lhs, rhs = dilation_sides(P, s, r, i)
            if lhs != rhs and bad is None:
                bad = f"s={s} r={r} i={i}: Q_i(sP,r) = {lhs} != Q_i(P,sr) s^i = {rhs}"
    results.append(CheckResult("dilation-rational", FAIL if bad else PASS,
                               bad or f"{3 * samples} samples"))
    bad = None
    base = compute_ehrhart(P)
    for m in (2, 3):
        scaled = compute_ehrhart(scale(P, m))
        for k in range(base.period * 2):
            for i in range(n + 1):
                lhs = coefficient(scaled, i, k)
                rhs = coefficient(base, i, m * k) * m ** i
                if lhs != rhs and bad is None:
                    bad = f"m={m} k={k} i={i}: G_i(mP,k) = {lhs} != G_i(P,mk) m^i = {rhs}"
    results.append(CheckResult("dilation-integer", FAIL if bad else PASS, bad or "m = 2, 3"))
    return results


def verify_periods(P: Polytope, rng: LCG64, samples: int) -> list:
    if P.kind == GENERAL:
        return [CheckResult("periods", SKIP, "indices unsupported for general polytopes")]
    n = P.ambient_dim
    q = rational_denominator(P)
    results = []
    indices = []
    for i in range(n + 1):
        rd = rational_i_index(P, i)
        indices.append(rd)
        name = f"periods i={i}"
        if rd is FREE:
            results.append(CheckResult(name, SKIP, f"rd_{i} is free"))
            continue
        bad = period_violations(P, i, sample_points(rng, samples, 2 * q))
        if bad:
            r, p, before, after = bad[0]
            results.append(CheckResult(name, FAIL, f"Q_{i}({r}) = {before} but Q_{i}({r}+{p}) = {after}"))
        else:
            results.append(CheckResult(name, PASS, f"rd_{i} = {rd}, {samples} samples"))
    bad = None
    for i in range(1, n + 1):
        a, b = indices[i - 1], indices[i]
        if a is not FREE and b is not FREE and (a / b).denominator != 1:
            bad = f"rd_{i - 1} / rd_{i} = {a / b}"
            break
    results.append(CheckResult("index-divisibility", FAIL if bad else PASS, bad or ""))
    return results


def _bound_line(name, P, samples):
    rep = check_Q1_bound(P, samples)
    if rep.ok:
        return CheckResult(name, PASS, f"Q_1(P,0) = {rep.q1_at_zero}, {rep.checked} samples")
    kind, r, v, bound = rep.violations[0]
    return CheckResult(name, FAIL, f"r={r}: Q_1 = {v} violates bound {bound}")


def verify_bound2d(P: Polytope, rng: LCG64, samples: int, random_polygons: int = 0) -> list:
    if P.ambient_dim != 2:
        return [CheckResult("bound2d", SKIP, "not 2-dimensional")]
    q = rational_denominator(P)
    results = [_bound_line("bound2d", P, sample_points(rng, samples, q))]
    for t in range(random_polygons):
        R = random_polygon(rng)
        results.append(_bound_line(f"bound2d random#{t}", R,
                                   sample_points(rng, samples, rational_denominator(R))))
    return results


def run_suites(P: Polytope, suites=SUITES, samples: int = 10, seed: int = 0,
               random_polygons: int = 0) -> list:
    rng = LCG64(seed)
    results = []
    for name in SUITES:
        if name not in suites:
            continue
        if name == "reciprocity":
            results += verify_reciprocity(P, rng, samples)
        elif name == "derivative":
            results += verify_derivative(P)
        elif name == "dilation":
            results += verify_dilation(P, rng, samples)
        elif name == "periods":
            try:
                results += verify_periods(P, rng, samples)
            except UnsupportedKind as exc:
                results.append(CheckResult("periods", SKIP, str(exc)))
        elif name == "bound2d":
            results += verify_bound2d(P, rng, samples, random_polygons)
    return results
