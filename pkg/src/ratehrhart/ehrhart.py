"""Classical Ehrhart quasi-polynomials by exact interpolation.

On each residue class ``k = j (mod d)`` the count ``#(kP ∩ Z^n)`` is a
polynomial of degree dim(P) in k, so dim(P)+1 counts determine it.  Every
class is re-checked against extra counts before it is accepted.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .counting import count
from .errors import DomainError, NotFullDimensional, ValidationFailed
from .linalg import solve_linear
from .polytope import Polytope, denominator


@dataclass(frozen=True)
class QuasiPolynomial:
    """Per residue class ``j`` the coefficients of ``k**0 .. k**degree``.

    ``coeffs`` may cover only some residues when the polynomial was built for
    a few classes on purpose.
    """

    period: int
    degree: int
    coeffs: dict

    def residues(self):
        return sorted(self.coeffs)


def interpolate(samples):
    """Coefficients (low to high) of the polynomial through ``(x, y)`` samples."""
    xs = [Fraction(x) for x, _ in samples]
    A = [[x ** i for i in range(len(xs))] for x in xs]
    return solve_linear(A, [Fraction(y) for _, y in samples])


def compute_ehrhart(P: Polytope, period_hint: int | None = None,
                    residues: Iterable[int] | None = None,
                    holdout: int = 1) -> QuasiPolynomial:
    """Interpolate G(P, k) on each requested residue class mod ``period_hint``.

    ``period_hint`` defaults to d(P) and must be a multiple of it.  ``holdout``
    extra dilations per class are counted and compared exactly; a mismatch
    raises :class:`ValidationFailed`.
    """
    if not P.is_full_dimensional:
        raise NotFullDimensional("Ehrhart interpolation needs a full-dimensional polytope")
    d = denominator(P)
    period = d if period_hint is None else int(period_hint)
    if period <= 0 or period % d:
        raise DomainError(f"period hint {period} is not a positive multiple of d(P) = {d}")
    m = P.dim
    wanted = range(period) if residues is None else sorted({j % period for j in residues})
    table = {}
    for j in wanted:
        ks = [j + t * period for t in range(m + 1)]
        c = interpolate([(k, count(P, k)) for k in ks])
        for t in range(m + 1, m + 1 + holdout):
            k = j + t * period
            if _horner(c, k) != count(P, k):
                raise ValidationFailed(
                    f"interpolation for residue {j} mod {period} misses count at k={k}")
        table[j] = tuple(c)
    return QuasiPolynomial(period, m, table)


def _horner(c, x):
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def eval_qp(qp: QuasiPolynomial, k: int) -> Fraction:
    """G(k), with negative k taken in its residue class (as reciprocity needs)."""
    return _horner(qp.coeffs[k % qp.period], k)


def coefficient(qp: QuasiPolynomial, i: int, k: int) -> Fraction:
    if not 0 <= i <= qp.degree:
        raise DomainError(f"coefficient index {i} out of range 0..{qp.degree}")
    return qp.coeffs[k % qp.period][i]
