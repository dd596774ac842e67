"""Exact linear algebra over the rationals and integer lattice helpers.

Matrices are plain row-major lists of lists.  Nothing here touches floating
point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import FREE, ScaleRequirement, as_rational, min_scale_point
from .errors import DomainError, SingularMatrix


def to_fractions(M):
    return [[as_rational(x) for x in row] for row in M]


def rref(M):
    """Reduced row echelon form.  Returns ``(R, pivot_columns)``."""
    R = to_fractions(M)
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def nullspace(M, cols: int | None = None):
    """Basis of ``{x : M x = 0}`` as a list of rational vectors."""
    if cols is None:
        cols = len(M[0])
    if not M:
        return [[Fraction(int(i == j)) for j in range(cols)] for i in range(cols)]
    R, pivots = rref(M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def solve_linear(A, b):
    """Exact solution of the square system ``A x = b``."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise DomainError("solve_linear needs a square system")
    aug = [list(row) + [rhs] for row, rhs in zip(to_fractions(A), b)]
    R, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [R[i][n] for i in range(n)]


def mat_vec(A, x):
    return [sum((a * y for a, y in zip(row, x)), Fraction(0)) for row in A]


def hnf_column_basis(M):
    """Hermite normal form basis of the lattice spanned by the columns of M.

    The result is an ``m x rank`` integer matrix in column-style lower echelon
    form: each basis column has a positive pivot strictly below the pivot of
    the previous column, everything above a pivot is zero, and entries to the
    left of a pivot in its row lie in ``[0, pivot)``.  Zero columns are dropped.
    """
    if not M:
        return []
    m = len(M)
    cols = [[int(M[i][j]) for i in range(m)] for j in range(len(M[0]))]
    cols = [c for c in cols if any(c)]
    r = 0
    for i in range(m):
        while True:
            live = [j for j in range(r, len(cols)) if cols[j][i] != 0]
            if not live:
                break
            j = min(live, key=lambda j: abs(cols[j][i]))
            cols[r], cols[j] = cols[j], cols[r]
            if len(live) == 1:
                break
            piv = cols[r][i]
            for j in range(r + 1, len(cols)):
                q = cols[j][i] // piv
                if q:
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[r])]
        if r < len(cols) and cols[r][i] != 0:
            if cols[r][i] < 0:
                cols[r] = [-x for x in cols[r]]
            piv = cols[r][i]
            for j in range(r):
                q = cols[j][i] // piv
                if q:
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[r])]
            r += 1
    basis = cols[:r]
    return [[basis[j][i] for j in range(r)] for i in range(m)]


@dataclass(frozen=True)
class AffineSubspace:
    """The set ``base_point + span(directions)``."""

    base_point: tuple
    directions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "base_point", tuple(as_rational(x) for x in self.base_point))
        object.__setattr__(self, "directions",
                           tuple(tuple(as_rational(x) for x in d) for d in self.directions))
        n = len(self.base_point)
        if any(len(d) != n for d in self.directions):
            raise DomainError("direction dimension does not match the base point")
        if self.directions and rank(list(self.directions)) != len(self.directions):
            raise DomainError("affine subspace directions are linearly dependent")

    @property
    def ambient_dim(self) -> int:
        return len(self.base_point)

    @property
    def dim(self) -> int:
        return len(self.directions)


def min_scale_affine(S: AffineSubspace, n: int | None = None,
                     order: Sequence[int] | None = None) -> ScaleRequirement:
    """Smallest r > 0 such that ``r*S`` contains an integer point.

    With ``S = v0 + L`` the condition is ``r v0 in Z^n + L``.  A rational map W
    with kernel exactly L sends this to ``r W v0`` lying in the full-rank
    lattice ``W(Z^n)``; in an HNF basis of that lattice the requirement becomes
    a plain point requirement.  ``order`` permutes the coordinates used for the
    elimination, which must not change the answer.
    """
    n = S.ambient_dim if n is None else n
    if n != S.ambient_dim:
        raise DomainError("ambient dimension mismatch")
    if S.dim == n:
        return FREE
    perm = list(order) if order is not None else list(range(n))
    if sorted(perm) != list(range(n)):
        raise DomainError("order must be a permutation of the coordinates")
    D = [[d[p] for p in perm] for d in S.directions]
    W_perm = nullspace(D, n) if D else [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    # undo the permutation so W acts on original coordinates
    W = []
    for row in W_perm:
        w = [Fraction(0)] * n
        for k, p in enumerate(perm):
            w[p] = row[k]
        W.append(w)
    # integral rows: rescaling W row-wise is an invertible change of target basis
    W_int = []
    for row in W:
        den = math.lcm(*(x.denominator for x in row))
        W_int.append([int(x * den) for x in row])
    B = hnf_column_basis(W_int)
    gamma = solve_linear(B, mat_vec(W_int, S.base_point))
    return min_scale_point(gamma)
