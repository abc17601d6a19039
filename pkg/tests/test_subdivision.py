import pytest
from hypothesis import given

from elimdeg.errors import PreconditionError
from elimdeg.geometry import LatticePolygon, convex_hull
from elimdeg.mixed_area import mixed_area_ie
from elimdeg.subdivision import (
    MixedSubdivision,
    SubdivisionCell,
    build_subdivision,
    is_generic_lifting,
    straighten_strips,
    subdivide,
    validate_subdivision,
)

from conftest import lattice_polygons

P1_WORKED = LatticePolygon(((0, 0), (5, 0), (5, 1), (2, 4), (0, 4)))
P2_WORKED = LatticePolygon(((0, 0), (4, 0), (9, 3), (8, 5), (0, 5)))
SQUARE = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])


def test_worked_subdivision():
    sub = build_subdivision(P1_WORKED, P2_WORKED)
    assert sub.mixed_area() == 58
    report = validate_subdivision(sub, P1_WORKED, P2_WORKED)
    assert report.ok and not report.warnings
    assert sorted(c.area for c in sub.mixed_cells()) == [1, 10, 15, 32]


def test_unit_squares():
    sub = build_subdivision(SQUARE, SQUARE)
    assert [c.kind for c in sub.cells].count("mixed") == 2
    assert sub.mixed_area() == 2
    assert sum(1 for c in sub.cells if c.kind.startswith("unmixed")) == 2


def test_segment_rejected():
    with pytest.raises(PreconditionError):
        build_subdivision(SQUARE, convex_hull([(0, 0), (2, 1)]))


def test_explicit_alpha():
    sub = build_subdivision(P1_WORKED, P2_WORKED, (1, 50))
    assert sub.alpha == (1, 50) and sub.mixed_area() == 58
    with pytest.raises(PreconditionError):
        build_subdivision(SQUARE, SQUARE, (0, 1))
    assert not is_generic_lifting(SQUARE, SQUARE, (1, 0))


def test_overlap_is_reported():
    sub = build_subdivision(SQUARE, SQUARE)
    doubled = MixedSubdivision(sub.cells + (sub.cells[-1],), sub.alpha)
    report = validate_subdivision(doubled, SQUARE, SQUARE)
    assert any(v.startswith("condition 2") for v in report.violations)


def test_missing_cell_is_reported():
    sub = build_subdivision(SQUARE, SQUARE)
    cells = tuple(c for c in sub.cells if c.kind != "mixed") + tuple(sub.mixed_cells()[:1])
    report = validate_subdivision(MixedSubdivision(cells, sub.alpha), SQUARE, SQUARE)
    assert any("sum to" in v for v in report.violations)


def test_nonstandard_cells_warn():
    # a lifting that puts the P1 cell elsewhere keeps the tiling but not the shape
    sub = build_subdivision(P1_WORKED, P2_WORKED, (1, -50))
    report = validate_subdivision(sub, P1_WORKED, P2_WORKED)
    assert report.ok
    assert report.warnings


def test_strips_worked():
    sub = build_subdivision(P1_WORKED, P2_WORKED)
    strips = straighten_strips(sub, P2_WORKED)
    by_edge = {s.edge: s for s in strips.strips}
    assert by_edge[(-1, 2)].ell == pytest.approx(5.5) and by_edge[(-1, 2)].area == 11
    assert by_edge[(5, 3)].ell == 5 and by_edge[(5, 3)].area == 15
    assert strips.distinguished_area == 32


def test_strips_unit_square():
    strips = straighten_strips(build_subdivision(SQUARE, SQUARE), SQUARE)
    assert [(s.edge, s.ell) for s in strips.strips] == [((0, 1), 1)]


def test_cell_json_roundtrip():
    sub = build_subdivision(P1_WORKED, P2_WORKED)
    assert MixedSubdivision.from_json(sub.to_json()) == sub
    cell = sub.cells[0]
    assert SubdivisionCell.from_json(cell.to_json()) == cell


@given(lattice_polygons(full=True), lattice_polygons(full=True))
def test_random_subdivisions_validate(P, Q):
    sub = build_subdivision(P, Q)
    assert validate_subdivision(sub, P, Q).ok
    assert sub.mixed_area() == mixed_area_ie(P, Q)


@given(lattice_polygons(max_points=3), lattice_polygons())
def test_degenerate_summands(P, Q):
    sub = subdivide(P, Q)
    assert validate_subdivision(sub, P, Q).ok
    assert sub.mixed_area() == mixed_area_ie(P, Q)
