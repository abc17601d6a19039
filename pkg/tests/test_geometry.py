from fractions import Fraction

import pytest
from hypothesis import given

from elimdeg.geometry import (
    LatticePolygon,
    convex_hull,
    edges,
    height_on_axis,
    is_minding_form,
    minkowski_sum,
    minkowski_sum_bruteforce,
    normalized_area,
)
from elimdeg.polynomial import support
from elimdeg.systems import worked_system

from conftest import lattice_polygons

SQUARE = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
P1_WORKED = LatticePolygon(((0, 0), (5, 0), (5, 1), (2, 4), (0, 4)))
P2_WORKED = LatticePolygon(((0, 0), (4, 0), (9, 3), (8, 5), (0, 5)))
P1_SHARED = convex_hull([(0, 4), (2, 3), (3, 2), (0, 0)])
P2_SHARED = convex_hull([(0, 4), (2, 3), (2, 2), (0, 0)])


def test_hull_of_worked_theta():
    _, theta = worked_system(seed=5)
    assert convex_hull(support(theta)) == P2_WORKED


def test_hull_small_cases():
    assert SQUARE.vertices == ((0, 0), (1, 0), (1, 1), (0, 1))
    assert convex_hull([(2, 2)]).vertices == ((2, 2),)
    assert convex_hull([(0, 0), (1, 1), (2, 2)]).vertices == ((0, 0), (2, 2))
    with pytest.raises(ValueError):
        convex_hull([])


def test_areas():
    assert normalized_area(SQUARE) == 1
    assert normalized_area(convex_hull([(0, 0), (1, 0), (0, 1)])) == Fraction(1, 2)
    assert normalized_area(P2_WORKED) == Fraction(73, 2)
    assert normalized_area(convex_hull([(0, 0), (3, 3)])) == 0


def test_right_edges_of_worked_p2():
    ascending = [e for e in edges(P2_WORKED) if e.vector[1] > 0]
    assert [e.vector for e in ascending] == [(5, 3), (-1, 2)]
    assert [e.tilde_nu for e in ascending] == [(3, -5), (2, 1)]


def test_edges_square_and_segment():
    assert [e.length for e in edges(SQUARE)] == [1, 1, 1, 1]
    seg = edges(convex_hull([(0, 0), (2, 2)]))
    assert sorted(e.vector for e in seg) == [(-2, -2), (2, 2)]
    assert [e.length for e in seg] == [2, 2]
    with pytest.raises(ValueError):
        edges(convex_hull([(1, 1)]))


def test_minkowski_examples():
    big = minkowski_sum(SQUARE, SQUARE)
    assert normalized_area(big) == 4
    assert big == SQUARE.scale(2)
    total = minkowski_sum(P1_SHARED, P2_SHARED)
    assert total.vertices == ((0, 0), (3, 2), (5, 4), (5, 5), (4, 6), (0, 8))
    assert normalized_area(total) == Fraction(49, 2)
    assert minkowski_sum(P2_WORKED, convex_hull([(3, 1)])) == P2_WORKED.translate((3, 1))


def test_standard_form():
    assert is_minding_form(P2_WORKED)
    assert is_minding_form(P1_WORKED)
    assert is_minding_form(P2_SHARED)
    check = is_minding_form(convex_hull([(1, 1), (1, 0)]))
    assert not check and "origin" in check.reason
    check = is_minding_form(convex_hull([(0, 0), (3, 0), (3, 2)]))
    assert not check and "left edge" in check.reason


def test_height_on_axis():
    assert height_on_axis(P2_WORKED) == 5
    assert height_on_axis(convex_hull([(1, 1), (2, 2)])) is None


def test_polygon_json_roundtrip():
    assert LatticePolygon.from_json(P2_WORKED.to_json()) == P2_WORKED


def test_lattice_points_and_contains():
    pts = SQUARE.scale(2).lattice_points()
    assert len(pts) == 9
    assert P2_WORKED.contains((4, 2)) and not P2_WORKED.contains((9, 5))


@given(lattice_polygons(), lattice_polygons())
def test_minkowski_matches_bruteforce(P, Q):
    assert minkowski_sum(P, Q) == minkowski_sum_bruteforce(P, Q)


@given(lattice_polygons())
def test_hull_is_idempotent(P):
    assert convex_hull(P.vertices) == P
    assert all(P.contains(v) for v in P.lattice_points())


@given(lattice_polygons(full=True))
def test_edge_vectors_close_up(P):
    es = edges(P)
    assert sum(e.vector[0] for e in es) == 0 and sum(e.vector[1] for e in es) == 0
    assert all(e.length >= 1 for e in es)
    assert normalized_area(P.scale(3)) == 9 * normalized_area(P)
