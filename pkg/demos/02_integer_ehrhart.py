"""Classical Ehrhart quasi-polynomials.

For integer k the count #(kP ∩ Z^n) is a polynomial in k on each residue
class modulo d(P).  The table is found by exact interpolation and checked
against extra counts.
"""
from fractions import Fraction

from ratehrhart import (build_polygon, build_simplex, compute_ehrhart, count,
                        denominator, eval_qp, format_poly, integer_i_index)

square = build_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
T1 = build_polygon([(Fraction(1, 2), Fraction(-1, 2)), (Fraction(-1, 2), Fraction(-1, 2)),
                    (0, Fraction(3, 2))])
tetra = build_simplex([(0, 0, 0), (Fraction(1, 2), 0, 0), (0, Fraction(1, 3), 0),
                       (0, 0, Fraction(1, 2))])

for name, P in [("unit square", square), ("T1", T1), ("rational tetrahedron", tetra)]:
    qp = compute_ehrhart(P, holdout=2)
    print(f"{name}: d(P) = {denominator(P)}, "
          f"d_i = {[str(integer_i_index(P, i)) for i in range(P.dim + 1)]}")
    for j in qp.residues():
        print(f"  k = {j} mod {qp.period}:  {format_poly(qp.coeffs[j], 'k')}")
    assert all(eval_qp(qp, k) == count(P, k) for k in range(3 * qp.period))

# reciprocity for integer k: G(-k) counts interior points of kP
qp = compute_ehrhart(square)
print("square  G(-1), G(-2), G(-3) =", ", ".join(str(eval_qp(qp, -k)) for k in (1, 2, 3)))
