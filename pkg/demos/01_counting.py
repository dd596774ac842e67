"""Counting lattice points in rational dilates.

The triangle T1 contains the origin; its translate T2 = T1 + (0, 1) does
not.  Translating by an integer vector changes nothing for integer
dilations, but rational dilation sees the shift: the counts differ at r = 2/3,
and for T2 the count even drops between r = 2 and r = 11/5.
"""
from fractions import Fraction

from ratehrhart import build_polygon, count, count_interior, translate

T1 = build_polygon([(Fraction(1, 2), Fraction(-1, 2)), (Fraction(-1, 2), Fraction(-1, 2)),
                    (0, Fraction(3, 2))])
T2 = translate(T1, (0, 1))

print("r      #(rT1)  #(rT2)")
for r in [Fraction(1, 3), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(2),
          Fraction(11, 5), Fraction(3)]:
    print(f"{str(r):6} {count(T1, r):6d}  {count(T2, r):6d}")

# integer dilations agree, as they must
assert all(count(T1, k) == count(T2, k) for k in range(6))
assert count(T1, Fraction(2, 3)) == 2 and count(T2, Fraction(2, 3)) == 1
assert count(T2, 2) == 7 > count(T2, Fraction(11, 5)) == 4

print()
print("interior points of rT1:", [count_interior(T1, Fraction(j, 3)) for j in range(1, 10)])
