"""Rational Ehrhart coefficients as piecewise polynomials.

Q(P, r) = sum_i Q_i(P, r) r^i holds for every rational r >= 0, and each
Q_i(P, .) is periodic with period q(P).  Between breakpoints it is a
polynomial of degree n - i, and the pieces satisfy Q_i' = -(i+1) Q_{i+1}.
At a breakpoint the value can differ from both one-sided limits.
"""
from fractions import Fraction

from ratehrhart import (build_polygon, check_derivative, compute_piecewise, eval_Qi,
                        eval_piecewise, format_poly, format_rational)

T1 = build_polygon([(Fraction(1, 2), Fraction(-1, 2)), (Fraction(-1, 2), Fraction(-1, 2)),
                    (0, Fraction(3, 2))])
pw = compute_piecewise(T1)
print("period q(T1) =", pw.period)
print("breakpoints:", " ".join(format_rational(b) for b in pw.breakpoints))
for (lo, hi), pieces in zip(pw.intervals, pw.pieces):
    print(f"on ({lo}, {hi}):")
    for j in reversed(range(3)):
        print(f"   Q{j} = {format_poly(pieces[j])}")
assert check_derivative(pw)

# the exact value at a breakpoint versus nearby values
b = Fraction(2, 3)
eps = Fraction(1, 1000)
print()
print(f"Q0 at {b - eps}: {eval_piecewise(pw, 0, b - eps)}")
print(f"Q0 at {b}:   {eval_Qi(T1, 0, b)}")
print(f"Q0 at {b + eps}: {eval_piecewise(pw, 0, b + eps)}")
