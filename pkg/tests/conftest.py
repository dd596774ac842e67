import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ratehrhart.closed_forms import TriangleParams, talpha_polygon  # noqa: E402
from ratehrhart.polytope import build_polygon, build_simplex, translate  # noqa: E402


def unit_square():
    return build_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def T1():
    return build_polygon([(F(1, 2), F(-1, 2)), (F(-1, 2), F(-1, 2)), (0, F(3, 2))])


def T2():
    return translate(T1(), (0, 1))


def half_triangle():
    """conv(0, (0,1), (1,1)), the a=b=t1=t2=1, s1=0, s2=1 member of the triangle family."""
    return build_polygon([(0, 0), (0, 1), (1, 1)])


def segment_1d():
    return build_simplex([(F(2, 3),), (F(4, 3),)])


def std_simplex(n):
    pts = [tuple(0 for _ in range(n))]
    pts += [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return build_simplex(pts)


@pytest.fixture
def square():
    return unit_square()


@pytest.fixture
def t1():
    return T1()


@pytest.fixture
def t2():
    return T2()


@pytest.fixture
def tri():
    return half_triangle()


@pytest.fixture
def seg():
    return segment_1d()


# polygons and simplices used by the broad property tests
def small_suite():
    return {
        "square": unit_square(),
        "T1": T1(),
        "T2": T2(),
        "half-triangle": half_triangle(),
        "centred square": build_polygon([(F(-1, 2), F(-1, 2)), (F(1, 2), F(-1, 2)),
                                         (F(1, 2), F(1, 2)), (F(-1, 2), F(1, 2))]),
        "pentagon": build_polygon([(0, 0), (F(3, 2), 0), (2, F(1, 1)), (1, F(5, 3)), (F(-1, 3), 1)]),
        "T3": talpha_polygon(3),
        "family(2,3,2,3,-1,1)": TriangleParams(2, 3, 2, 3, -1, 1).polygon(),
        "segment": segment_1d(),
        "simplex3": build_simplex([(0, 0, 0), (F(1, 2), 0, 0), (0, F(1, 3), 0), (0, 0, F(1, 2))]),
    }


@pytest.fixture(params=sorted(small_suite()))
def suite_polytope(request):
    return small_suite()[request.param]


_acceptance_lines = []


@pytest.fixture
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
