"""Regular mixed subdivisions of P1 + P2 from a linear lifting.

Lift each point p of P1 to height alpha . p and every point of P2 to 0.
The lower faces of the lifted sum are indexed by directions w in the plane:
the cell at w is (face of P1 minimizing (w + alpha) . p) + (face of P2
minimizing w . q).  Two-dimensional cells come from three sources:

* w = -alpha: all of P1 plus a vertex of P2 (unmixed),
* w = 0: a vertex of P1 plus all of P2 (unmixed),
* a crossing of the ray -alpha + t*nu_E (E an edge of P1) with the ray
  s*nu_F (F an edge of P2), t, s > 0, nu the inner normals: the
  parallelogram E + F (mixed).

alpha is generic when it is orthogonal to no edge of P1 or P2; then these
are all the cells and they tile P1 + P2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import InvariantError, PreconditionError
from .geometry import (
    LatticePolygon,
    convex_hull,
    cross,
    dot,
    edges,
    is_minding_form,
    minkowski_sum,
    normalized_area,
)

KINDS = ("unmixed-P1", "unmixed-P2", "mixed")
MAX_RETRIES = 40


@dataclass(frozen=True)
class SubdivisionCell:
    polygon: LatticePolygon
    kind: str
    p1_face: LatticePolygon
    p2_face: LatticePolygon

    @property
    def area(self) -> Fraction:
        return normalized_area(self.polygon)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": [list(p) for p in self.polygon.vertices],
            "decomposition": {
                "p1_face": [list(p) for p in self.p1_face.vertices],
                "p2_face": [list(p) for p in self.p2_face.vertices],
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "SubdivisionCell":
        dec = data["decomposition"]
        return cls(
            LatticePolygon(tuple(map(tuple, data["vertices"]))),
            data["kind"],
            LatticePolygon(tuple(map(tuple, dec["p1_face"]))),
            LatticePolygon(tuple(map(tuple, dec["p2_face"]))),
        )


@dataclass(frozen=True)
class MixedSubdivision:
    cells: tuple[SubdivisionCell, ...]
    alpha: tuple[int, int]

    def mixed_cells(self) -> list[SubdivisionCell]:
        return [c for c in self.cells if c.kind == "mixed"]

    def mixed_area(self) -> Fraction:
        return sum((c.area for c in self.mixed_cells()), Fraction(0))

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "cells": [c.to_json() for c in self.cells]}

    @classmethod
    def from_json(cls, data: dict) -> "MixedSubdivision":
        return cls(tuple(SubdivisionCell.from_json(c) for c in data["cells"]), tuple(data["alpha"]))


def _edges(P: LatticePolygon):
    return edges(P) if P.dimension > 0 else []


def _inner_normal(vec):
    n, m = vec
    return (-m, n)


def is_generic_lifting(P1: LatticePolygon, P2: LatticePolygon, alpha) -> bool:
    return all(dot(alpha, e.vector) != 0 for P in (P1, P2) for e in _edges(P))


def _argmin_vertex(P: LatticePolygon, w):
    return min(P.vertices, key=lambda p: dot(p, w))


def _segment(e) -> LatticePolygon:
    return convex_hull([e.start, e.end])


def _cells_for(P1: LatticePolygon, P2: LatticePolygon, alpha) -> list[SubdivisionCell]:
    neg_alpha = (-alpha[0], -alpha[1])
    q = _argmin_vertex(P2, neg_alpha)
    p = _argmin_vertex(P1, alpha)
    cells = [
        SubdivisionCell(P1.translate(q), "unmixed-P1", P1, LatticePolygon((q,))),
        SubdivisionCell(P2.translate(p), "unmixed-P2", LatticePolygon((p,)), P2),
    ]
    for E in _edges(P1):
        nu_e = _inner_normal(E.vector)
        for F in _edges(P2):
            nu_f = _inner_normal(F.vector)
            det = -cross(nu_e, nu_f)
            if det == 0:
                continue
            t = Fraction(-cross(alpha, nu_f), det)
            s = Fraction(cross(nu_e, alpha), det)
            if t > 0 and s > 0:
                corners = [
                    (a[0] + b[0], a[1] + b[1]) for a in (E.start, E.end) for b in (F.start, F.end)
                ]
                cells.append(SubdivisionCell(convex_hull(corners), "mixed", _segment(E), _segment(F)))
    return cells


def build_subdivision(P1: LatticePolygon, P2: LatticePolygon, alpha=None) -> MixedSubdivision:
    """Mixed subdivision of P1 + P2 for the lifting alpha (auto when ``None``).

    Auto mode tries alpha = (1, N) with N starting just above the widths of
    both polygons and doubling until the lifting is generic and the result
    validates.  A large N makes the P1 cell sit on the top-right vertex of
    the top edge of P2.
    """
    if P1.dimension < 2 or P2.dimension < 2:
        raise PreconditionError("mixed subdivisions need two 2-dimensional polygons")
    return subdivide(P1, P2, alpha)


def subdivide(P1: LatticePolygon, P2: LatticePolygon, alpha=None) -> MixedSubdivision:
    """Same construction without the dimension check.

    Points and segments are allowed as summands: the unmixed cell of a
    segment has area 0 and a point contributes no mixed cells.
    """
    if alpha is not None:
        alpha = (int(alpha[0]), int(alpha[1]))
        if not is_generic_lifting(P1, P2, alpha):
            raise PreconditionError(f"lifting {alpha} is orthogonal to an edge; choose another")
        return MixedSubdivision(tuple(_cells_for(P1, P2, alpha)), alpha)

    span = max(max(p[0] for p in P.vertices) - min(p[0] for p in P.vertices) for P in (P1, P2))
    N = span + 1
    for _ in range(MAX_RETRIES):
        alpha = (1, N)
        if is_generic_lifting(P1, P2, alpha):
            sub = MixedSubdivision(tuple(_cells_for(P1, P2, alpha)), alpha)
            if validate_subdivision(sub, P1, P2).ok:
                return sub
        N *= 2
    raise InvariantError("no generic lifting validated; the construction is broken for these polygons")


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _is_translate(cell: LatticePolygon, P: LatticePolygon) -> bool:
    if len(cell.vertices) != len(P.vertices):
        return False
    d = (cell.vertices[0][0] - P.vertices[0][0], cell.vertices[0][1] - P.vertices[0][1])
    return P.translate(d) == cell


def _is_parallelogram(poly: LatticePolygon) -> bool:
    v = poly.vertices
    if len(v) != 4:
        return False
    e = [(v[(i + 1) % 4][0] - v[i][0], v[(i + 1) % 4][1] - v[i][1]) for i in range(4)]
    return e[0] == (-e[2][0], -e[2][1]) and e[1] == (-e[3][0], -e[3][1])


def _separation(A: LatticePolygon, B: LatticePolygon):
    """A normal nu and level c with A in {nu.p <= c} and B in {nu.p >= c}."""
    for P, Q, flip in ((A, B, 1), (B, A, -1)):
        if len(P.vertices) < 2:
            continue
        for e in edges(P):
            nu = e.normal
            if P.support_value(nu) <= min(dot(q, nu) for q in Q.vertices):
                c = P.support_value(nu)
                return (nu, c) if flip == 1 else ((-nu[0], -nu[1]), -c)
    return None


def _faces_meet_properly(A: LatticePolygon, B: LatticePolygon) -> bool:
    if A.dimension == 0 and B.dimension == 0:
        return True  # only when P1 and P2 are both points
    sep = _separation(A, B)
    if sep is None:
        return False
    nu, c = sep
    a_on = [p for p in A.vertices if dot(p, nu) == c]
    b_on = [p for p in B.vertices if dot(p, nu) == c]
    if not a_on or not b_on:
        return True
    d = (-nu[1], nu[0])
    a_lo, a_hi = min(dot(p, d) for p in a_on), max(dot(p, d) for p in a_on)
    b_lo, b_hi = min(dot(p, d) for p in b_on), max(dot(p, d) for p in b_on)
    lo, hi = max(a_lo, b_lo), min(a_hi, b_hi)
    if lo > hi:
        return True

    def is_face(f_lo, f_hi):
        return (lo, hi) == (f_lo, f_hi) or (lo == hi and lo in (f_lo, f_hi))

    return is_face(a_lo, a_hi) and is_face(b_lo, b_hi)


def validate_subdivision(sub: MixedSubdivision, P1: LatticePolygon, P2: LatticePolygon) -> ValidationReport:
    """Check the four defining conditions plus the mixed-area total."""
    from .mixed_area import mixed_area_ie

    report = ValidationReport()
    total = minkowski_sum(P1, P2)
    cells = list(sub.cells)

    # (1) union covers P1 + P2
    for i, cell in enumerate(cells):
        if not all(total.contains(p) for p in cell.polygon.vertices):
            report.violations.append(f"condition 1: cell {i} leaves P1+P2")
    area_sum = sum((c.area for c in cells), Fraction(0))
    if area_sum != normalized_area(total):
        report.violations.append(
            f"condition 1: cell areas sum to {area_sum}, P1+P2 has area {normalized_area(total)}"
        )

    # (2) pairwise intersections are common faces
    for i, j in combinations(range(len(cells)), 2):
        if not _faces_meet_properly(cells[i].polygon, cells[j].polygon):
            report.violations.append(f"condition 2: cells {i} and {j} do not meet in a common face")

    # (3) exactly two unmixed cells, translates of P1 and P2
    u1 = [i for i, c in enumerate(cells) if c.kind == "unmixed-P1"]
    u2 = [i for i, c in enumerate(cells) if c.kind == "unmixed-P2"]
    if len(u1) != 1 or len(u2) != 1:
        report.violations.append(f"condition 3: expected one unmixed cell per polygon, got {len(u1)} and {len(u2)}")
    for i in u1:
        if not _is_translate(cells[i].polygon, P1):
            report.violations.append(f"condition 3: cell {i} is not a translate of P1")
    for i in u2:
        if not _is_translate(cells[i].polygon, P2):
            report.violations.append(f"condition 3: cell {i} is not a translate of P2")

    # (4) the rest are parallelograms E + F
    for i, c in enumerate(cells):
        if c.kind != "mixed":
            continue
        if not _is_parallelogram(c.polygon) or c.area <= 0:
            report.violations.append(f"condition 4: mixed cell {i} is not a parallelogram")
            continue
        if len(c.p1_face.vertices) == 2 and len(c.p2_face.vertices) == 2:
            if minkowski_sum(c.p1_face, c.p2_face) != c.polygon:
                report.violations.append(f"condition 4: mixed cell {i} differs from its decomposition")

    expected = mixed_area_ie(P1, P2)
    if sub.mixed_area() != expected:
        report.violations.append(f"mixed cells total {sub.mixed_area()}, mixed area is {expected}")

    if report.ok and is_minding_form(P1) and is_minding_form(P2):
        m = max(y for _, y in P1.vertices)
        n = max(y for _, y in P2.vertices)
        b = max(x for x, y in P2.vertices if y == n)
        box = convex_hull([(0, n), (b, n), (0, n + m), (b, n + m)])
        if b > 0 and not any(c.kind == "mixed" and c.polygon == box for c in cells):
            report.warnings.append("no mixed cell equals [0,b]x[n,n+m]")
        if not any(c.kind == "unmixed-P1" and c.polygon == P1.translate((b, n)) for c in cells):
            report.warnings.append("unmixed P1 cell is not P1 + (b, n)")
        if not any(c.kind == "unmixed-P2" and c.polygon == P2 for c in cells):
            report.warnings.append("unmixed P2 cell is not P2 + (0, 0)")
    return report


@dataclass(frozen=True)
class StraightenedStrip:
    edge: tuple[int, int]
    ell: Fraction
    area: Fraction
    cells: tuple[int, ...]


@dataclass(frozen=True)
class StripReport:
    strips: tuple[StraightenedStrip, ...]
    distinguished_cell: int | None
    distinguished_area: Fraction | None

    def ell_multiset(self) -> list[Fraction]:
        return [s.ell for s in self.strips for _ in range(s.edge[1])]


def straighten_strips(sub: MixedSubdivision, P2: LatticePolygon) -> StripReport:
    """Collapse each strip of mixed cells over a right edge F_i of P2.

    ell_i is the width of the parallelogram [0, ell_i] + F_i with the same
    area as the strip, i.e. strip area / m_i.  P1 is read off the unmixed
    P1 cell, whose P1 face is P1 itself.
    """
    unmixed = [c for c in sub.cells if c.kind == "unmixed-P1"]
    if len(unmixed) != 1:
        raise PreconditionError("subdivision needs exactly one unmixed P1 cell")
    P1 = unmixed[0].p1_face
    check = validate_subdivision(sub, P1, P2)
    if not check.ok:
        raise PreconditionError("invalid subdivision: " + "; ".join(check.violations))
    strips = []
    for e in edges(P2):
        n_i, m_i = e.vector
        if m_i <= 0:
            continue
        seg = _segment(e)
        idx = tuple(i for i, c in enumerate(sub.cells) if c.kind == "mixed" and c.p2_face == seg)
        area = sum((sub.cells[i].area for i in idx), Fraction(0))
        strips.append(StraightenedStrip(e.vector, area / m_i, area, idx))

    dist, dist_area = None, None
    if is_minding_form(P1) and is_minding_form(P2):
        m = max(y for _, y in P1.vertices)
        n = max(y for _, y in P2.vertices)
        b = max(x for x, y in P2.vertices if y == n)
        box = convex_hull([(0, n), (b, n), (0, n + m), (b, n + m)])
        for i, c in enumerate(sub.cells):
            if c.kind == "mixed" and c.polygon == box:
                dist, dist_area = i, c.area
    return StripReport(tuple(strips), dist, dist_area)
