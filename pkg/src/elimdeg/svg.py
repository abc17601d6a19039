"""Deterministic SVG figures of lattice polygons and mixed subdivisions.

Output depends only on the geometry: fixed 20 px lattice pitch, cells in
list order, numbers printed with fixed precision, no timestamps or ids.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .geometry import LatticePolygon, edges, normalized_area
from .subdivision import MixedSubdivision

PITCH = 20
MARGIN = 40
FILLS = {"unmixed-P1": "#cfe2f3", "unmixed-P2": "#d9ead3", "mixed": "#fce5cd"}


def _num(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{float(v):.2f}"


def _fmt_area(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


class _Canvas:
    def __init__(self, points):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.x0, self.y1 = min(xs), max(ys)
        self.width = (max(xs) - self.x0) * PITCH + 2 * MARGIN
        self.height = (self.y1 - min(ys)) * PITCH + 2 * MARGIN
        self.body: list[str] = []

    def pt(self, p):
        return (MARGIN + (Fraction(p[0]) - self.x0) * PITCH, MARGIN + (self.y1 - Fraction(p[1])) * PITCH)

    def grid(self):
        cols = (self.width - 2 * MARGIN) // PITCH
        rows = (self.height - 2 * MARGIN) // PITCH
        for i in range(cols + 1):
            for j in range(rows + 1):
                x, y = MARGIN + i * PITCH, MARGIN + j * PITCH
                self.body.append(f'<circle cx="{x}" cy="{y}" r="1" fill="#999999"/>')

    def polygon(self, poly: LatticePolygon, fill: str, stroke="#000000"):
        if len(poly.vertices) == 1:
            x, y = self.pt(poly.vertices[0])
            self.body.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="3" fill="{stroke}"/>')
            return
        coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in map(self.pt, poly.vertices))
        tag = "polygon" if len(poly.vertices) > 2 else "polyline"
        fill = fill if tag == "polygon" else "none"
        self.body.append(f'<{tag} points="{coords}" fill="{fill}" stroke="{stroke}" stroke-width="1.5"/>')

    def text(self, p, label, size=11, anchor="middle"):
        x, y = self.pt(p)
        self.body.append(
            f'<text x="{_num(x)}" y="{_num(y)}" font-family="monospace" font-size="{size}" '
            f'text-anchor="{anchor}">{escape(label)}</text>'
        )

    def render(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">'
        )
        return "\n".join([head, '<rect width="100%" height="100%" fill="#ffffff"/>'] + self.body + ["</svg>"]) + "\n"


def _centroid(poly: LatticePolygon):
    n = len(poly.vertices)
    return (Fraction(sum(p[0] for p in poly.vertices), n), Fraction(sum(p[1] for p in poly.vertices), n))


def polygon_svg(P: LatticePolygon, annotate_h: bool = True) -> str:
    """One polygon; ascending right edges labelled with h = -n/m."""
    canvas = _Canvas(list(P.vertices) + [(0, 0)])
    canvas.grid()
    canvas.polygon(P, "#d9ead3")
    if annotate_h and len(P.vertices) >= 2:
        for e in edges(P):
            n, m = e.vector
            if m > 0:
                mid = (Fraction(2 * e.start[0] + n, 2) + Fraction(1, 2), Fraction(2 * e.start[1] + m, 2))
                canvas.text(mid, f"h={_fmt_area(Fraction(-n, m))}", anchor="start")
    for v in P.vertices:
        canvas.text((v[0], Fraction(v[1]) - Fraction(3, 4)), f"({v[0]},{v[1]})", size=9)
    canvas.text(_centroid(P), f"area {_fmt_area(normalized_area(P))}")
    return canvas.render()


def subdivision_svg(sub: MixedSubdivision) -> str:
    """Every cell filled by kind and labelled with its area."""
    pts = [p for c in sub.cells for p in c.polygon.vertices] + [(0, 0)]
    canvas = _Canvas(pts)
    canvas.grid()
    for cell in sub.cells:
        canvas.polygon(cell.polygon, FILLS[cell.kind])
    for cell in sub.cells:
        label = "P1" if cell.kind == "unmixed-P1" else "P2" if cell.kind == "unmixed-P2" else ""
        text = f"{label} {_fmt_area(cell.area)}".strip()
        canvas.text(_centroid(cell.polygon), text)
    total = sub.mixed_area()
    canvas.body.append(
        f'<text x="{MARGIN}" y="{MARGIN // 2}" font-family="monospace" font-size="12">'
        f"mixed cells total {_fmt_area(total)}</text>"
    )
    return canvas.render()
