"""Bounding the linear coefficient of a polygon.

For a rational polygon, |Q_1(P, r)| never exceeds its value at r = 0.  This
samples seeded random polygons over one period; the generator is a plain
64-bit LCG, so any implementation can reproduce the stream.
"""
from ratehrhart import LCG64, check_Q1_bound, random_polygon

rng = LCG64(0)
for t in range(25):
    P = random_polygon(rng)
    rep = check_Q1_bound(P)
    assert rep.ok, rep.violations
    print(f"polygon {t:2d}: {len(P.vertices)} vertices, Q1(P,0) = {rep.q1_at_zero}, "
          f"{rep.checked} samples ok")
