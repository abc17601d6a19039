import random
from fractions import Fraction

import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, settings
from hypothesis import strategies as st

from elimdeg.errors import CommonFactorError, PreconditionError
from elimdeg.linalg import bareiss_determinant, interpolate, laplace_determinant, sample_points, sylvester_determinant
from elimdeg.polynomial import UnivariatePolynomial, degree_in, parse_polynomial
from elimdeg.resultant import (
    ComparisonReport,
    check_prediction,
    finite_solution_accounting,
    raw_resultant,
    resultant_degree,
    resultant_polynomial,
    swap_identity_check,
    symbolic_resultant,
)
from elimdeg.systems import shared_edge_system, sparse_coefficients, sparse_system, worked_system

from conftest import polynomials, random_polynomial

X, Y = sympy.symbols("x y")
U = UnivariatePolynomial


def to_sympy(p):
    return sum(c * X**a * Y**b for (a, b), c in p.items())


def sympy_resultant(f, theta, eliminate="y"):
    # sympy.resultant flips the sign for some pairs with deg f < deg theta,
    # so the oracle is the determinant of sympy's own Sylvester matrix
    var, other = (Y, X) if eliminate == "y" else (X, Y)
    matrix = DomainMatrix.from_Matrix(sylvester(to_sympy(f), to_sympy(theta), var))
    matrix = matrix.convert_to(sympy.ZZ[other])
    r = sympy.Poly(matrix.domain.to_sympy(matrix.det()), other)
    return U(reversed([int(c) for c in r.all_coeffs()])) if not r.is_zero else U()


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_laplace(rows):
    assert bareiss_determinant(rows) == laplace_determinant(rows, 0, 1)
    assert bareiss_determinant(rows) == sympy.Matrix(rows).det()


def test_small_determinants():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert sylvester_determinant([1, 0, -4], [1, -2]) == 0


def test_interpolation_recovers_polynomial():
    coeffs = [3, 0, -7, 2]
    xs = sample_points(4)
    assert xs == [0, 1, -1, 2]
    ys = [U(coeffs)(x) for x in xs]
    assert interpolate(xs, ys) == [Fraction(c) for c in coeffs]


def test_y_minus_x():
    f, theta = parse_polynomial("y - x"), parse_polynomial("y + x")
    assert resultant_polynomial(f, theta) == U([0, 2])
    assert symbolic_resultant(f, theta) == U([0, 2])
    assert raw_resultant(theta, f) == U([0, -2])
    assert swap_identity_check(f, theta)


def test_common_factor_raises():
    f, theta = parse_polynomial("x*y + y"), parse_polynomial("x*y^2 + y^2")
    with pytest.raises(CommonFactorError):
        resultant_polynomial(f, theta)
    assert raw_resultant(f, theta).is_zero()


def test_nothing_to_eliminate():
    with pytest.raises(PreconditionError):
        resultant_polynomial(parse_polynomial("x + 1"), parse_polynomial("x + 2"))


@pytest.mark.parametrize("seed", [0, 17])
def test_worked_resultant(seed):
    f, theta = worked_system(seed)
    assert resultant_degree(f, theta) == 58
    assert swap_identity_check(f, theta)
    report = check_prediction(f, theta)
    assert report.drop == 0


def test_worked_resultant_matches_sympy():
    f, theta = worked_system(3, bound=5)
    assert resultant_polynomial(f, theta) == sympy_resultant(f, theta)


def test_second_example():
    generic = sparse_system(sparse_coefficients(seed=8))
    assert resultant_degree(*generic, "y") == 26
    assert resultant_degree(*generic, "x") == 26
    degenerate = sparse_system(sparse_coefficients(seed=8, a=0, l=0))
    ry, rx = check_prediction(*degenerate, "y"), check_prediction(*degenerate, "x")
    assert (ry.predicted, ry.actual) == (25, 25)
    assert (rx.predicted, rx.actual) == (24, 24)
    assert ry.common_factor_x == U([0, 0, 1]) and ry.psi_divisibility >= 1
    assert rx.common_factor_y == U([0, 1]) and rx.psi_divisibility >= 1
    acc = finite_solution_accounting(
        [check_prediction(*generic, "y"), check_prediction(*generic, "x")], [ry, rx]
    )
    assert acc["x"]["escaped"] == 1 and acc["y"]["escaped"] == 2
    assert acc["x"]["finite"] == acc["y"]["finite"] == 23


def test_accounting_identical_reports():
    report = check_prediction(*worked_system(0))
    acc = finite_solution_accounting(report, report)
    assert acc["x"]["escaped"] == 0 and acc["x"]["absorbed"] == 0


def test_shared_edge_system_independent_coefficients():
    # With a, b, c, d independent the leading coefficient of Res_y is d^2 (a - c),
    # so the degree stays at the mixed area 13 and no face degenerates.
    for a, b, c, d in [(2, 3, 5, 7), (-4, 1, 9, -2)]:
        f, theta = shared_edge_system(a, b, c, d)
        report = check_prediction(f, theta)
        assert (report.predicted, report.actual) == (13, 13)
        assert not report.warnings
        assert resultant_polynomial(f, theta) == sympy_resultant(f, theta)


def test_shared_edge_system_on_a_equals_c():
    f, theta = shared_edge_system(3, 5, 3, 7)
    report = check_prediction(f, theta)
    assert (report.predicted, report.actual) == (13, 12)
    assert any("share a root" in w for w in report.warnings)


def test_report_json_roundtrip():
    degenerate = sparse_system(sparse_coefficients(seed=8, a=0, l=0))
    report = check_prediction(*degenerate, "x")
    assert ComparisonReport.from_json(report.to_json()) == report


@settings(max_examples=40, deadline=None)
@given(polynomials(max_deg=3, max_terms=5), polynomials(max_deg=3, max_terms=5), st.sampled_from("xy"))
def test_resultant_matches_sympy(f, theta, eliminate):
    from elimdeg.puiseux import orient

    if degree_in(orient(f, eliminate), "y") + degree_in(orient(theta, eliminate), "y") == 0:
        return
    assert raw_resultant(f, theta, eliminate) == sympy_resultant(f, theta, eliminate)


def test_symbolic_matches_numeric_small():
    rng = random.Random(1)
    checked = 0
    while checked < 25:
        f = random_polynomial(rng, max_deg=2)
        theta = random_polynomial(rng, max_deg=2)
        m, n = degree_in(f, "y"), degree_in(theta, "y")
        if m + n == 0 or m + n > 4:
            continue
        assert symbolic_resultant(f, theta) == raw_resultant(f, theta)
        checked += 1
