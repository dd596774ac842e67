import itertools
import math
from fractions import Fraction as F

import pytest

from ratehrhart.closed_forms import (TriangleParams, check_Q1_bound, segment_coeffs,
                                     talpha_polygon, talpha_Q0, triangle_Q, triangle_Q0,
                                     triangle_Q1, triangle_Q2)
from ratehrhart.counting import count
from ratehrhart.errors import InvalidParams, NotDimensionTwo
from ratehrhart.polytope import volume
from ratehrhart.rational import compute_piecewise, eval_piecewise, eval_Qi
from ratehrhart.rng import LCG64, random_polygon

from conftest import segment_1d, unit_square
from oracles import naive_count

HALF = TriangleParams(1, 1, 1, 1, 0, 1)
T3P = TriangleParams(1, 1, 3, 3, -1, 1)


def small_grid():
    for a, b, t1, t2 in itertools.product((1, 2), (1, 2, 3), (1, 2, 3), (1, 2)):
        if math.gcd(a, b) != 1:
            continue
        for s1, s2 in itertools.product(range(-3, 4), repeat=2):
            if math.gcd(s1, t1) == 1 and math.gcd(s2, t2) == 1 and F(s2, t2) > F(s1, t1):
                yield TriangleParams(a, b, t1, t2, s1, s2)


def test_params_validated():
    with pytest.raises(InvalidParams):
        TriangleParams(2, 4, 1, 1, 0, 1)
    with pytest.raises(InvalidParams):
        TriangleParams(1, 1, 2, 1, 2, 1)
    with pytest.raises(InvalidParams):
        TriangleParams(1, 1, 1, 1, 1, 0)
    with pytest.raises(InvalidParams):
        TriangleParams(0, 1, 1, 1, 0, 1)


def test_q2_examples():
    assert triangle_Q2(HALF) == F(1, 2)
    assert triangle_Q2(T3P) == F(1, 3) == volume(T3P.polygon())


def test_q1_examples():
    assert triangle_Q1(HALF, 0) == F(3, 2)
    assert triangle_Q1(HALF, 0) == eval_Qi(HALF.polygon(), 1, 0)
    # {1/2} = 1/2, so only the constant (t1 + t2)/(2 t1 t2) = 1 remains
    assert triangle_Q1(HALF, F(1, 2)) == 1 == eval_Qi(HALF.polygon(), 1, F(1, 2))
    for r in (1, 2, 5):
        assert triangle_Q1(HALF, r) == triangle_Q1(HALF, 0)


def test_q0_examples():
    assert triangle_Q0(HALF, F(1, 2)) == F(3, 8)
    assert triangle_Q(HALF, F(1, 2)) == 1 == naive_count(HALF.polygon(), F(1, 2))
    p = TriangleParams(2, 3, 2, 3, -1, 1)
    step = F(p.b * p.l, p.a)
    for m in range(3):
        assert triangle_Q0(p, m * step) == 1


def test_identity_small_grid():
    bad = []
    for p in small_grid():
        P = p.polygon()
        assert triangle_Q2(p) == volume(P)
        for j in range(0, 25):
            r = F(j, 6)
            if triangle_Q(p, r) != count(P, r):
                bad.append((p, r))
    assert not bad


def test_coefficient_periods():
    for p in list(small_grid())[::7]:
        q1_period = F(p.b, p.a)
        q0_period = F(p.b * p.l, p.a)
        for j in range(12):
            r = F(j, 12)
            assert triangle_Q1(p, r + q1_period) == triangle_Q1(p, r)
            assert triangle_Q0(p, r + q0_period) == triangle_Q0(p, r)


def test_closed_forms_match_exact_path():
    for p in [HALF, T3P, TriangleParams(2, 3, 2, 3, -1, 1), TriangleParams(1, 2, 3, 2, -2, 1)]:
        P = p.polygon()
        for j in range(13):
            r = F(j, 5)
            assert triangle_Q1(p, r) == eval_Qi(P, 1, r)
            assert triangle_Q0(p, r) == eval_Qi(P, 0, r)


def _segment_count(p, i, r):
    # lattice points of r*g_i are the multiples k*(s_i, t_i) with k*t_i <= r*a/b
    t = p.t1 if i == 1 else p.t2
    return sum(1 for k in range(100) if k * t <= p.height * r)


@pytest.mark.parametrize("p", [HALF, T3P, TriangleParams(2, 3, 2, 3, -1, 1)])
def test_segment_coeffs(p):
    assert segment_coeffs(1, HALF, 0) == (1, 1)
    for i in (1, 2):
        t = p.t1 if i == 1 else p.t2
        assert segment_coeffs(i, p, F(p.b * t, p.a))[1] == 1
        for j in range(20):
            r = F(j, 7)
            q1, q0 = segment_coeffs(i, p, r)
            assert q1 * r + q0 == _segment_count(p, i, r)
    with pytest.raises(InvalidParams):
        segment_coeffs(3, p, 0)


def test_talpha_examples():
    assert talpha_Q0(3, 0, 0, 0) == 1
    assert talpha_Q0(4, 0, 2, 0) == 1
    assert talpha_Q0(6, 0, 3, F(1, 2)) == F(11, 8) == eval_Qi(talpha_polygon(6), 0, F(7, 2))
    with pytest.raises(InvalidParams):
        talpha_Q0(1, 0, 0, 0)
    with pytest.raises(InvalidParams):
        talpha_Q0(3, 0, 3, 0)
    with pytest.raises(InvalidParams):
        talpha_Q0(3, 0, 0, 1)


def test_talpha_matches_piecewise():
    for alpha in range(2, 7):
        P = talpha_polygon(alpha)
        pw = compute_piecewise(P)
        for m, k in itertools.product(range(2), range(alpha)):
            for rt in (F(1, 4), F(1, 2), F(3, 4)):
                r = m * alpha + k + rt
                assert talpha_Q0(alpha, m, k, rt) == eval_piecewise(pw, 0, r)


def test_talpha_grows():
    for alpha in (4, 6, 8):
        assert talpha_Q0(alpha, 0, alpha // 2, 0) > F(alpha, 4) - F(1, alpha)


def test_bound_square():
    rep = check_Q1_bound(unit_square())
    assert rep.q1_at_zero == 2 and rep.ok and rep.checked == 20


def test_bound_needs_plane():
    with pytest.raises(NotDimensionTwo):
        check_Q1_bound(segment_1d())


def test_bound_random_polygons():
    rng = LCG64(7)
    for _ in range(10):
        assert check_Q1_bound(random_polygon(rng)).ok


def test_sharpened_bound_on_grid():
    for p in list(small_grid())[::5]:
        rep = check_Q1_bound(p.polygon(), [F(j, 8) for j in range(16)], params=p)
        assert rep.ok, rep.violations


def test_violation_is_reported(monkeypatch):
    import ratehrhart.closed_forms as mod
    real = mod.eval_Qi
    monkeypatch.setattr(mod, "eval_Qi", lambda P, i, r: real(P, i, r) if r == 0 else F(5))
    rep = check_Q1_bound(unit_square(), [F(1, 2)])
    assert not rep.ok and rep.violations[0][:2] == ("abs", F(1, 2))
