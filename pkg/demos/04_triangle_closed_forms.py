"""Closed forms for a family of lattice triangles.

T = conv(0, (s1/t1 a/b, a/b), (s2/t2 a/b, a/b)) has explicit rational
Ehrhart coefficients.  Here they are compared with direct counting,
and the Q_0 of the skinny triangles T_alpha is shown to grow with alpha.
"""
from fractions import Fraction

from ratehrhart import (TriangleParams, count, eval_Qi, talpha_polygon, talpha_Q0,
                        triangle_Q0, triangle_Q1, triangle_Q2)

p = TriangleParams(a=2, b=3, t1=2, t2=3, s1=-1, s2=1)
P = p.polygon()
print("vertices:", [tuple(str(x) for x in v) for v in p.vertices()])
print("Q2 =", triangle_Q2(p))
print(" r      Q1       Q0      count")
for j in range(0, 13):
    r = Fraction(j, 4)
    q1, q0 = triangle_Q1(p, r), triangle_Q0(p, r)
    total = triangle_Q2(p) * r * r + q1 * r + q0
    assert total == count(P, r)
    assert (q1, q0) == (eval_Qi(P, 1, r), eval_Qi(P, 0, r))
    print(f" {str(r):6} {str(q1):8} {str(q0):8} {count(P, r)}")

print()
for alpha in range(2, 9):
    peak = max(talpha_Q0(alpha, 0, k, 0) for k in range(alpha))
    assert peak == max(eval_Qi(talpha_polygon(alpha), 0, k) for k in range(alpha))
    print(f"alpha = {alpha}: max_k Q0(T_alpha, k) = {peak}")
