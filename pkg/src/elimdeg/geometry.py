"""Exact lattice polygons in the plane.

Polygons are stored as counterclockwise vertex cycles starting at the
lexicographically smallest vertex, without collinear middle points.  Points
(one vertex) and segments (two vertices) are valid polygons.  Areas are
normalized so the unit square has area 1 and are returned as ``Fraction``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple[int, int]


def cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1]


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_points(points: Iterable[Sequence]) -> list[tuple]:
    """Monotone-chain hull; works for any exact number type."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _turn(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) == 2 and cycle[0] == cycle[1]:
        return cycle[:1]
    return cycle


@dataclass(frozen=True)
class EdgeDatum:
    """One counterclockwise edge: the polygon lies to the left of ``vector``."""

    start: Point
    vector: Point
    normal: Point  # primitive outward normal
    length: int  # normalized (lattice) length
    tilde_nu: Point  # outward normal scaled by the lattice length: (m, -n)

    @property
    def end(self) -> Point:
        return (self.start[0] + self.vector[0], self.start[1] + self.vector[1])


@dataclass(frozen=True)
class LatticePolygon:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple((int(x), int(y)) for x, y in self.vertices)
        if not verts:
            raise ValueError("a polygon needs at least one vertex")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> "LatticePolygon":
        return convex_hull(points)

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def __len__(self):
        return len(self.vertices)

    def translate(self, v: Point) -> "LatticePolygon":
        return LatticePolygon(tuple((x + v[0], y + v[1]) for x, y in self.vertices))

    def scale(self, k: int) -> "LatticePolygon":
        if k < 0:
            raise ValueError("dilation factor must be nonnegative")
        if k == 0:
            return LatticePolygon(((0, 0),))
        return LatticePolygon(tuple((k * x, k * y) for x, y in self.vertices))

    def contains(self, p: Sequence) -> bool:
        """Closed containment test (exact)."""
        v = self.vertices
        if len(v) == 1:
            return tuple(p) == v[0]
        if len(v) == 2:
            a, b = v
            if _turn(a, b, p) != 0:
                return False
            return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
        return all(_turn(v[i], v[(i + 1) % len(v)], p) >= 0 for i in range(len(v)))

    def support_value(self, w: Sequence) -> int:
        """max over the polygon of the linear functional ``w``."""
        return max(dot(p, w) for p in self.vertices)

    def face(self, w: Sequence) -> "LatticePolygon":
        """Face on which ``w`` attains its maximum."""
        best = self.support_value(w)
        return LatticePolygon.from_points(p for p in self.vertices if dot(p, w) == best)

    def lattice_points(self) -> list[Point]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return [
            (x, y)
            for x in range(min(xs), max(xs) + 1)
            for y in range(min(ys), max(ys) + 1)
            if self.contains((x, y))
        ]

    def to_json(self) -> dict:
        return {"vertices": [list(p) for p in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "LatticePolygon":
        return convex_hull(data["vertices"])


def convex_hull(points: Iterable[Sequence[int]]) -> LatticePolygon:
    pts = [(int(p[0]), int(p[1])) for p in points]
    if not pts:
        raise ValueError("convex hull of an empty point set")
    return LatticePolygon(tuple(hull_points(pts)))


def normalized_area(P: LatticePolygon) -> Fraction:
    v = P.vertices
    if len(v) < 3:
        return Fraction(0)
    twice = sum(cross(v[i], v[(i + 1) % len(v)]) for i in range(len(v)))
    return Fraction(twice, 2)


def _edge(start: Point, vec: Point) -> EdgeDatum:
    n, m = vec
    g = math.gcd(n, m)
    return EdgeDatum(start, vec, (m // g, -n // g), g, (m, -n))


def edges(P: LatticePolygon) -> list[EdgeDatum]:
    """Counterclockwise edge cycle; a segment gives both orientations."""
    v = P.vertices
    if len(v) < 2:
        raise ValueError("a point polygon has no edges")
    out = []
    for i, a in enumerate(v):
        b = v[(i + 1) % len(v)]
        out.append(_edge(a, (b[0] - a[0], b[1] - a[1])))
    return out


def _angle_key(vec):
    # Counterclockwise order starting just after the downward direction (0,-1),
    # which is the order edges leave the lexicographically smallest vertex.
    u = (-vec[1], vec[0])  # rotate by +90 degrees so (0,-1) maps to (1,0)
    upper = u[1] > 0 or (u[1] == 0 and u[0] < 0)
    return 0 if upper else 1, u


def _compare_directions(a, b):
    ha, ua = _angle_key(a)
    hb, ub = _angle_key(b)
    if ha != hb:
        return ha - hb
    c = cross(ua, ub)
    return -1 if c > 0 else (1 if c < 0 else 0)


def minkowski_sum(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    """P + Q by merging the two edge sequences in angular order."""
    vecs = []
    for poly in (P, Q):
        if len(poly.vertices) >= 2:
            vecs.extend(e.vector for e in edges(poly))
    vecs.sort(key=functools.cmp_to_key(_compare_directions))
    merged: list[list[int]] = []
    for vec in vecs:
        if merged and cross(merged[-1], vec) == 0 and dot(merged[-1], vec) > 0:
            merged[-1][0] += vec[0]
            merged[-1][1] += vec[1]
        else:
            merged.append(list(vec))
    start = (P.vertices[0][0] + Q.vertices[0][0], P.vertices[0][1] + Q.vertices[0][1])
    verts = [start]
    for vec in merged[:-1]:
        last = verts[-1]
        verts.append((last[0] + vec[0], last[1] + vec[1]))
    return LatticePolygon(tuple(verts))


def minkowski_sum_bruteforce(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    """Hull of all pairwise vertex sums; slow reference for tests."""
    return convex_hull((p[0] + q[0], p[1] + q[1]) for p in P.vertices for q in Q.vertices)


def height_on_axis(P: LatticePolygon) -> int | None:
    """Top of ``P ∩ {x = 0}`` if that set is a segment starting at the origin."""
    if not P.contains((0, 0)):
        return None
    ys = [p[1] for p in P.vertices if p[0] == 0]
    return max(ys, default=None)


@dataclass(frozen=True)
class ShapeCheck:
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


def is_minding_form(P: LatticePolygon) -> ShapeCheck:
    """First quadrant, contains the origin, left edge reaches the full height."""
    if any(x < 0 or y < 0 for x, y in P.vertices):
        return ShapeCheck(False, "polygon must lie in the first quadrant")
    if not P.contains((0, 0)):
        return ShapeCheck(False, "polygon must contain the origin")
    top = max(y for _, y in P.vertices)
    left = height_on_axis(P)
    if left != top:
        return ShapeCheck(False, f"left edge reaches height {left}, polygon height is {top}")
    return ShapeCheck(True, "ok")
