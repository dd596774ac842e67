"""Rational polytopes: construction, faces, volume and lattice indices.

Three kinds are supported.  ``polygon`` and ``simplex`` derive their facet
halfspaces from the vertices and support face enumeration; ``general`` takes
user-supplied halfspaces and supports only the operations that need nothing
beyond an H-description (counting and the Ehrhart machinery).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .arith import (FREE, ScaleRequirement, as_rational, lcm_scales,
                    min_scale_point)
from .errors import (AffinelyDependent, CollinearAll, DegeneratePolytope,
                     DomainError, DuplicateVertex, InvalidPolytope, NonConvex,
                     NotFullDimensional, UnsupportedKind)
from .linalg import AffineSubspace, min_scale_affine, nullspace, rank

POLYGON = "polygon"
SIMPLEX = "simplex"
GENERAL = "general"
KINDS = (POLYGON, SIMPLEX, GENERAL)

MAX_DIM = 6


@dataclass(frozen=True)
class Halfspace:
    """``normal . x <= offset`` with a primitive integer normal."""

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        a = tuple(int(x) for x in self.normal)
        if not any(a):
            raise DomainError("halfspace normal must be nonzero")
        if math.gcd(*a) != 1:
            raise DomainError(f"halfspace normal {a} is not primitive")
        object.__setattr__(self, "normal", a)
        object.__setattr__(self, "offset", as_rational(self.offset))

    @classmethod
    def from_rational(cls, normal, offset) -> "Halfspace":
        """Rescale an arbitrary nonzero rational normal to a primitive integer one."""
        a = [as_rational(x) for x in normal]
        c = as_rational(offset)
        den = math.lcm(*(x.denominator for x in a))
        ints = [int(x * den) for x in a]
        g = math.gcd(*ints)
        if g == 0:
            raise DomainError("halfspace normal must be nonzero")
        return cls(tuple(x // g for x in ints), c * den / g)

    def value(self, x) -> Fraction:
        return sum((a * xi for a, xi in zip(self.normal, x)), Fraction(0))

    def contains(self, x, strict: bool = False) -> bool:
        v = self.value(x)
        return v < self.offset if strict else v <= self.offset


@dataclass(frozen=True)
class FaceRef:
    """A face given by the indices of the vertices spanning it."""

    dim: int
    vertices: tuple


@dataclass(frozen=True)
class Polytope:
    ambient_dim: int
    kind: str
    vertices: tuple
    halfspaces: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown polytope kind {self.kind!r}")
        verts = tuple(tuple(as_rational(x) for x in v) for v in self.vertices)
        if not verts:
            raise InvalidPolytope("a polytope needs at least one vertex")
        if any(len(v) != self.ambient_dim for v in verts):
            raise InvalidPolytope("vertex dimension does not match ambient dimension")
        object.__setattr__(self, "vertices", verts)
        hs = tuple(self.halfspaces)
        for h in hs:
            if len(h.normal) != self.ambient_dim:
                raise InvalidPolytope("halfspace dimension does not match ambient dimension")
            if not all(h.contains(v) for v in verts):
                raise InvalidPolytope(f"vertex outside halfspace {h}")
        object.__setattr__(self, "halfspaces", hs)

    @property
    def dim(self) -> int:
        v0 = self.vertices[0]
        diffs = [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]
        return rank(diffs) if diffs else 0

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def __str__(self):
        pts = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"{self.kind}[{pts}]"


# -- construction ---------------------------------------------------------


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _ccw_order(points):
    """Exact angular sort around the lowest (then leftmost) point."""
    start = min(points, key=lambda p: (p[1], p[0]))
    rest = [p for p in points if p != start]

    def cmp(a, b):
        c = _cross(start, a, b)
        if c > 0:
            return -1
        if c < 0:
            return 1
        da = (a[0] - start[0]) ** 2 + (a[1] - start[1]) ** 2
        db = (b[0] - start[0]) ** 2 + (b[1] - start[1]) ** 2
        return -1 if da < db else (1 if da > db else 0)

    return [start] + sorted(rest, key=cmp_to_key(cmp))


def build_polygon(vertices) -> Polytope:
    """Convex polygon from its vertices in any order.

    The vertices are canonicalized to counterclockwise order starting at the
    lowest-leftmost one.  Edge ``i`` runs from vertex ``i`` to vertex ``i+1``
    and halfspace ``i`` belongs to edge ``i``.
    """
    pts = [tuple(as_rational(x) for x in v) for v in vertices]
    if any(len(p) != 2 for p in pts):
        raise DomainError("polygon vertices must be 2-dimensional")
    if len(pts) < 3:
        raise DomainError("a polygon needs at least 3 vertices")
    if len(set(pts)) != len(pts):
        raise DuplicateVertex("duplicate polygon vertex")
    if all(_cross(pts[0], pts[1], p) == 0 for p in pts[2:]):
        raise CollinearAll("all polygon vertices are collinear")
    order = _ccw_order(pts)
    m = len(order)
    for i in range(m):
        if _cross(order[i], order[(i + 1) % m], order[(i + 2) % m]) <= 0:
            raise NonConvex("vertices are not in strictly convex position")
    halfspaces = []
    for i in range(m):
        p, q = order[i], order[(i + 1) % m]
        dx, dy = q[0] - p[0], q[1] - p[1]
        # interior lies to the left of a counterclockwise edge
        halfspaces.append(Halfspace.from_rational((dy, -dx), dy * p[0] - dx * p[1]))
    return Polytope(2, POLYGON, tuple(order), tuple(halfspaces))


def build_simplex(vertices) -> Polytope:
    """Simplex from n+1 affinely independent points of Q^n.

    Facet ``j`` is the one opposite vertex ``j``.
    """
    pts = [tuple(as_rational(x) for x in v) for v in vertices]
    n = len(pts[0]) if pts else 0
    if n < 1 or len(pts) != n + 1 or any(len(p) != n for p in pts):
        raise DomainError("a simplex in dimension n needs n+1 points of dimension n")
    if n > MAX_DIM:
        raise DomainError(f"simplex dimension {n} exceeds the cap of {MAX_DIM}")
    v0 = pts[0]
    if rank([[a - b for a, b in zip(p, v0)] for p in pts[1:]]) != n:
        raise AffinelyDependent("simplex vertices are affinely dependent")
    halfspaces = []
    for j in range(n + 1):
        others = [p for k, p in enumerate(pts) if k != j]
        base = others[0]
        diffs = [[a - b for a, b in zip(p, base)] for p in others[1:]]
        (normal,) = nullspace(diffs, n)
        c = sum((a * x for a, x in zip(normal, base)), Fraction(0))
        inside = sum((a * x for a, x in zip(normal, pts[j])), Fraction(0))
        if inside > c:
            normal, c = [-a for a in normal], -c
        halfspaces.append(Halfspace.from_rational(normal, c))
    return Polytope(n, SIMPLEX, tuple(pts), tuple(halfspaces))


def build_general(vertices, halfspaces) -> Polytope:
    """Polytope with user-supplied vertices and facet halfspaces.

    Every vertex must satisfy every halfspace, and each halfspace must be tight
    at no fewer than dim(P) vertices.
    """
    pts = [tuple(as_rational(x) for x in v) for v in vertices]
    if not pts:
        raise InvalidPolytope("a polytope needs at least one vertex")
    n = len(pts[0])
    hs = [h if isinstance(h, Halfspace) else Halfspace.from_rational(*h) for h in halfspaces]
    if not hs:
        raise InvalidPolytope("general polytopes need halfspaces")
    P = Polytope(n, GENERAL, tuple(pts), tuple(hs))
    d = P.dim
    for h in hs:
        tight = sum(1 for v in pts if h.value(v) == h.offset)
        if tight < d:
            raise InvalidPolytope(f"halfspace {h} is tight at only {tight} vertices")
    return P


# -- faces ----------------------------------------------------------------


def faces(P: Polytope, i: int) -> list:
    if P.kind == GENERAL:
        raise UnsupportedKind("face enumeration needs a polygon or simplex")
    if not 0 <= i <= P.dim:
        raise DomainError(f"face dimension {i} out of range 0..{P.dim}")
    m = len(P.vertices)
    if P.kind == SIMPLEX:
        return [FaceRef(i, c) for c in itertools.combinations(range(m), i + 1)]
    if i == 0:
        return [FaceRef(0, (j,)) for j in range(m)]
    if i == 1:
        return [FaceRef(1, (j, (j + 1) % m)) for j in range(m)]
    return [FaceRef(2, tuple(range(m)))]


def affine_hull(P: Polytope, f: FaceRef) -> AffineSubspace:
    pts = [P.vertices[j] for j in f.vertices]
    base = pts[0]
    directions = []
    for p in pts[1:]:
        d = [a - b for a, b in zip(p, base)]
        if rank(directions + [d]) > len(directions):
            directions.append(d)
    return AffineSubspace(base, tuple(tuple(d) for d in directions))


# -- indices --------------------------------------------------------------


def denominator(P: Polytope) -> int:
    """d(P): the smallest positive integer k with kP integral."""
    return math.lcm(*(x.denominator for v in P.vertices for x in v))


def rational_denominator(P: Polytope) -> Fraction:
    """q(P): the smallest positive rational r with rP integral."""
    q = lcm_scales(min_scale_point(v) for v in P.vertices)
    if q is FREE:
        raise DegeneratePolytope("the polytope is the origin alone")
    return q


def face_scales(P: Polytope, i: int) -> list:
    return [min_scale_affine(affine_hull(P, f)) for f in faces(P, i)]


def rational_i_index(P: Polytope, i: int) -> ScaleRequirement:
    """rd_i(P), or ``FREE`` if every i-face hull meets Z^n at all scales."""
    return lcm_scales(face_scales(P, i))


def integer_i_index(P: Polytope, i: int):
    """d_i(P) as a positive integer, or ``FREE``.

    A face whose minimal scale is p/q meets Z^n at integer scale k exactly when
    k is a multiple of p.
    """
    nums = [s.numerator for s in face_scales(P, i) if s is not FREE]
    if not nums:
        return FREE
    return math.lcm(*nums)


# -- measure and transforms ----------------------------------------------


def volume(P: Polytope) -> Fraction:
    if P.kind == GENERAL:
        raise UnsupportedKind("volume needs a polygon or simplex")
    if not P.is_full_dimensional:
        raise NotFullDimensional("volume needs a full-dimensional polytope")
    if P.kind == POLYGON:
        v = P.vertices
        twice = sum((v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1]
                     for i in range(len(v))), Fraction(0))
        return abs(twice) / 2
    n = P.ambient_dim
    v0 = P.vertices[0]
    return abs(_det([[a - b for a, b in zip(p, v0)] for p in P.vertices[1:]])) / math.factorial(n)


def _det(M):
    M = [list(row) for row in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


def scale(P: Polytope, s) -> Polytope:
    s = as_rational(s)
    if s <= 0:
        raise DomainError("scale factor must be positive")
    verts = tuple(tuple(s * x for x in v) for v in P.vertices)
    hs = tuple(Halfspace(h.normal, h.offset * s) for h in P.halfspaces)
    return Polytope(P.ambient_dim, P.kind, verts, hs)


def translate(P: Polytope, t: Sequence[int]) -> Polytope:
    t = tuple(as_rational(x) for x in t)
    if len(t) != P.ambient_dim:
        raise DomainError("translation vector has the wrong dimension")
    verts = tuple(tuple(x + y for x, y in zip(v, t)) for v in P.vertices)
    hs = tuple(Halfspace(h.normal, h.offset + h.value(t)) for h in P.halfspaces)
    return Polytope(P.ambient_dim, P.kind, verts, hs)


def contains(P: Polytope, x, strict: bool = False) -> bool:
    x = [as_rational(c) for c in x]
    return all(h.contains(x, strict) for h in P.halfspaces)
