import dataclasses
from fractions import Fraction as F

import pytest

from ratehrhart.counting import count
from ratehrhart.errors import AtBreakpoint, FreeIndex
from ratehrhart.polytope import rational_denominator, rational_i_index, volume
from ratehrhart.rational import (breakpoints, check_derivative, check_dilation_identity,
                                 check_periods, check_reciprocity, compute_piecewise,
                                 derivative_violations, eval_piecewise, eval_Q, eval_Qi,
                                 falsify_smaller_period, poly_derivative, poly_eval,
                                 rational_coefficients, reciprocity_sides)

from conftest import T1, T2, half_triangle, segment_1d, std_simplex, unit_square


def test_poly_helpers():
    assert poly_eval((1, -2, 1), F(1, 2)) == F(1, 4)
    assert poly_derivative((1, -2, 1)) == (-2, 2)


def test_square_q1():
    P = unit_square()
    assert eval_Qi(P, 1, F(1, 2)) == 1
    for j in range(12):
        r = F(j, 5)
        frac = r - int(r)
        assert eval_Qi(P, 1, r) == 2 * (1 - frac)
        assert eval_Qi(P, 0, r) == (1 - frac) ** 2


def test_t1_top_coefficient_is_area():
    for j in range(1, 13):
        assert eval_Qi(T1(), 2, F(j, 7)) == 1


def test_q0_at_zero(suite_polytope):
    if not suite_polytope.is_full_dimensional:
        pytest.skip("needs a full-dimensional polytope")
    assert eval_Qi(suite_polytope, 0, 0) == 1


def test_eval_Q_values():
    assert eval_Q(T2(), F(2, 3)) == 1
    assert eval_Q(T2(), F(11, 5)) == 4
    assert eval_Q(unit_square(), F(7, 3)) == 9


def test_unreduced_argument_agrees():
    P = T1()
    for a, b in [(1, 3), (2, 3), (5, 4), (7, 6), (3, 2)]:
        assert rational_coefficients(P, a, b) == rational_coefficients(P, 2 * a, 2 * b)


def test_breakpoint_sets():
    assert breakpoints(unit_square()) == (0, 1)
    assert breakpoints(segment_1d()) == (0, F(3, 4), F(3, 2))
    # T1 offsets 1/2, 3/2, 3/2 give alpha = 2 and 2/3
    assert breakpoints(T1()) == (0, F(2, 3), F(4, 3), 2)


def test_t1_count_constant_between_breakpoints():
    P = T1()
    bps = breakpoints(P)
    changes = [F(j, 60) for j in range(1, 121) if count(P, F(j, 60)) != count(P, F(j - 1, 60))]
    # every jump happens at a breakpoint, shifted by whole periods
    q = rational_denominator(P)
    for r in changes:
        assert r in bps or (r - q) in bps


def test_segment_jumps_match_breakpoints():
    P = segment_1d()
    jumps = {F(j, 24) for j in range(1, 37) if count(P, F(j, 24)) != count(P, F(j, 24) - F(1, 1000))}
    assert jumps == {F(3, 4), F(3, 2)}


def test_square_pieces():
    pw = compute_piecewise(unit_square())
    assert pw.intervals == [(0, 1)]
    q0, q1, q2 = pw.pieces[0]
    assert q2 == (1,)
    assert q1 == (2, -2)
    assert q0 == (1, -2, 1)
    assert eval_piecewise(pw, 0, F(5, 2)) == F(1, 4)


def test_half_triangle_pieces():
    pw = compute_piecewise(half_triangle())
    assert len(pw.intervals) == 1
    q0, q1, q2 = pw.pieces[0]
    assert q1 == (F(3, 2), -1)
    assert q0 == (1, F(-3, 2), F(1, 2))
    assert q2 == (F(1, 2),)


def test_t1_piece_shapes():
    pw = compute_piecewise(T1())
    for pcs in pw.pieces:
        assert len(pcs[1]) == 2 and len(pcs[0]) == 3 and pcs[2] == (1,)


def test_eval_piecewise_rejects_breakpoints():
    pw = compute_piecewise(T1())
    with pytest.raises(AtBreakpoint):
        eval_piecewise(pw, 0, F(2, 3))
    with pytest.raises(AtBreakpoint):
        eval_piecewise(pw, 0, F(8, 3))


def test_dual_paths_agree(suite_polytope):
    P = suite_polytope
    if not P.is_full_dimensional:
        pytest.skip("needs a full-dimensional polytope")
    pw = compute_piecewise(P)
    n = P.ambient_dim
    bps = set(pw.breakpoints)
    q = pw.period
    for j in range(1, 25):
        r = q * F(j, 11)
        if r - (r // q) * q in bps:
            continue
        vals = [eval_piecewise(pw, i, r) for i in range(n + 1)]
        assert vals == [eval_Qi(P, i, r) for i in range(n + 1)]
        assert sum(v * r ** i for i, v in enumerate(vals)) == count(P, r)
    assert all(pcs[n] == (volume(P),) for pcs in pw.pieces)
    assert check_derivative(pw)


def test_corrupted_table_fails_derivative_check():
    pw = compute_piecewise(unit_square())
    q0, q1, q2 = pw.pieces[0]
    bad = dataclasses.replace(pw, pieces=((q0, (2, -3), q2),))
    found = derivative_violations(bad)
    assert not check_derivative(bad)
    assert {v[1] for v in found} == {0, 1}


@pytest.mark.parametrize("P, r, interior", [
    (unit_square(), 2, 1), (std_simplex(2), 3, 1), (T1(), F(2, 3), 1),
])
def test_reciprocity_examples(P, r, interior):
    assert reciprocity_sides(P, r) == (interior, interior)
    assert check_reciprocity(P, r)


def test_reciprocity_suite(suite_polytope):
    P = suite_polytope
    if not P.is_full_dimensional:
        pytest.skip("needs a full-dimensional polytope")
    for r in [F(1, 3), F(1, 2), F(3, 4), 1, F(7, 5), F(5, 2)]:
        assert check_reciprocity(P, r)


def test_periods():
    P = T1()
    rd1 = rational_i_index(P, 1)
    assert check_periods(P, 1, [rd1 * j / 20 for j in range(20)])
    sq = unit_square()
    for i in range(2):
        assert check_periods(sq, i, [F(j, 7) for j in range(10)])
    seg = segment_1d()
    assert rational_i_index(seg, 0) == F(3, 2)
    assert check_periods(seg, 0, [F(j, 8) for j in range(20)])


def test_period_of_free_index():
    with pytest.raises(FreeIndex):
        check_periods(T1(), 2, [F(1, 2)])


def test_dilation_identity():
    assert check_dilation_identity(T1(), 1, F(3, 5), 0)
    assert check_dilation_identity(T1(), 2, F(1, 3), 1)
    assert check_dilation_identity(unit_square(), F(3, 2), F(2, 3), 0)


def test_falsify_smaller_periods():
    P = T1()
    rep = falsify_smaller_period(P, [rational_i_index(P, 1) / 2])
    assert rep.all_found
    sq = unit_square()
    assert falsify_smaller_period(sq, [F(1, 2), F(1, 3)]).all_found
    # the true period has no witness; that is reported as missing only
    rep = falsify_smaller_period(sq, [F(1)])
    assert rep.missing == [1] and not rep.all_found

