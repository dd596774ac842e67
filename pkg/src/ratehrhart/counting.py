"""Brute-force lattice point enumeration in rational dilates.

This is the ground truth every other computation is checked against.

Each halfspace ``a.x <= r*c`` is turned into the integer threshold
``a.z <= floor(r*c)`` (``ceil(r*c) - 1`` when strict) once per call, so the
enumeration itself runs on Python ints only.  The widest bounding-box
coordinate is solved as an interval for every assignment of the remaining
coordinates; in the plane that is one interval per row.
"""
from __future__ import annotations

import itertools
import math

from .arith import as_rational
from .errors import (NegativeDilation, NonpositiveDilation, NotFullDimensional,
                     DomainError)
from .polytope import MAX_DIM, Polytope


def _thresholds(P: Polytope, r, strict: bool):
    out = []
    for h in P.halfspaces:
        rc = r * h.offset
        out.append((h.normal, math.ceil(rc) - 1 if strict else math.floor(rc)))
    return out


def _box(P: Polytope, r):
    box = []
    for k in range(P.ambient_dim):
        xs = [r * v[k] for v in P.vertices]
        box.append((math.ceil(min(xs)), math.floor(max(xs))))
    return box


def _enumerate(P: Polytope, r, strict: bool) -> int:
    n = P.ambient_dim
    if n > MAX_DIM:
        raise DomainError(f"enumeration is capped at dimension {MAX_DIM}")
    box = _box(P, r)
    if any(lo > hi for lo, hi in box):
        return 0
    cons = _thresholds(P, r, strict)
    inner = max(range(n), key=lambda k: box[k][1] - box[k][0])
    outer = [k for k in range(n) if k != inner]
    lo0, hi0 = box[inner]

    # split by the sign of the inner coefficient
    upper, lower, fixed = [], [], []
    for a, b in cons:
        rest = [a[k] for k in outer]
        c = a[inner]
        if c > 0:
            upper.append((rest, c, b))
        elif c < 0:
            lower.append((rest, -c, b))
        else:
            fixed.append((rest, b))

    total = 0
    for z in itertools.product(*(range(box[k][0], box[k][1] + 1) for k in outer)):
        ok = True
        for rest, b in fixed:
            if sum(x * y for x, y in zip(rest, z)) > b:
                ok = False
                break
        if not ok:
            continue
        lo, hi = lo0, hi0
        for rest, c, b in upper:
            # c*x <= b - rest.z
            t = (b - sum(x * y for x, y in zip(rest, z))) // c
            if t < hi:
                hi = t
        for rest, c, b in lower:
            # -c*x <= b - rest.z  =>  x >= ceil(-(b - rest.z)/c)
            t = -((b - sum(x * y for x, y in zip(rest, z))) // c)
            if t > lo:
                lo = t
        if hi >= lo:
            total += hi - lo + 1
    return total


def count(P: Polytope, r) -> int:
    """Number of integer points in ``rP``; ``0*P`` is the origin alone."""
    r = as_rational(r)
    if r < 0:
        raise NegativeDilation(f"dilation factor must be nonnegative, got {r}")
    if r == 0:
        return 1
    return _enumerate(P, r, strict=False)


def count_interior(P: Polytope, r) -> int:
    """Number of integer points in the interior of ``rP``."""
    r = as_rational(r)
    if r <= 0:
        raise NonpositiveDilation(f"dilation factor must be positive, got {r}")
    if not P.is_full_dimensional:
        raise NotFullDimensional("interior counting needs a full-dimensional polytope")
    return _enumerate(P, r, strict=True)
