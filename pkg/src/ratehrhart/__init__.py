"""Exact lattice point counts in rational dilates of rational polytopes.

``#(rP ∩ Z^n) = sum_i Q_i(P, r) r**i`` for rational ``r >= 0``, with every
coefficient ``Q_i(P, .)`` periodic and piecewise polynomial.  This package
counts, interpolates and recovers those coefficients in exact arithmetic.
"""
from .arith import (FREE, Free, ceil, floor, format_rational, frac, min_scale_point,
                    parse_rational, rat_lcm)
from .closed_forms import (TriangleParams, check_Q1_bound, segment_coeffs, talpha_polygon,
                           talpha_Q0, triangle_Q, triangle_Q0, triangle_Q1, triangle_Q2)
from .counting import count, count_interior
from .ehrhart import QuasiPolynomial, coefficient, compute_ehrhart, eval_qp
from .fileformat import dump_polytope, load_polytope, parse_polytope
from .linalg import AffineSubspace, hnf_column_basis, min_scale_affine, solve_linear
from .polytope import (FaceRef, Halfspace, Polytope, affine_hull, build_general,
                       build_polygon, build_simplex, contains, denominator, faces,
                       integer_i_index, rational_denominator, rational_i_index,
                       scale, translate, volume)
from .rational import (PiecewiseQP, breakpoints, check_derivative,
                       check_dilation_identity, check_periods, check_reciprocity,
                       compute_piecewise, eval_piecewise, eval_Q, eval_Qi,
                       falsify_smaller_period, format_poly)
from .rng import LCG64, random_polygon

__version__ = "0.1.0"
