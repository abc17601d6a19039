"""Leading exponents of the roots y(x) and the degree of the eliminant.

The roots of theta(x, y) = 0, expanded in decreasing powers of x, start
with c * x**h where h is read off the ascending right-hand edges of the
Newton polygon of theta: an edge vector (n_i, m_i) with m_i > 0 carries m_i
roots with h = -n_i / m_i.  Substituting such a root into f gives a series of
degree max(k + l*h) over the terms x^k y^l of f.  Summing those degrees over
all roots and adding m*b (b = deg B_0) predicts the degree of the final
equation obtained by eliminating y.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvariantError, PreconditionError
from .geometry import LatticePolygon, convex_hull, edges, is_minding_form
from .linalg import sylvester_determinant
from .polynomial import Polynomial, UnivariatePolynomial, coefficient_slice, degree_in, support

K_SOURCES = ("support", "polygon")


@dataclass(frozen=True)
class PuiseuxClass:
    h: Fraction
    multiplicity: int
    edge: tuple[int, int]
    edge_polynomial: UnivariatePolynomial | None = None

    def to_json(self) -> dict:
        return {"h": _frac_text(self.h), "mult": self.multiplicity, "edge": list(self.edge)}


def _frac_text(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def right_edge_classes(P2: LatticePolygon) -> list[PuiseuxClass]:
    """One class per counterclockwise edge with positive y-increment, bottom first."""
    if len(P2.vertices) < 2:
        raise PreconditionError("a point polygon has no root classes")
    if min(y for _, y in P2.vertices) > 0:
        raise PreconditionError("polygon has min-y > 0: theta is divisible by the eliminated variable")
    found = []
    for e in edges(P2):
        n, m = e.vector
        if m > 0:
            found.append((e.start[1], PuiseuxClass(Fraction(-n, m), m, (n, m))))
    found.sort(key=lambda t: t[0])
    return [cls for _, cls in found]


def face_polynomial(p: Polynomial, h: Fraction) -> UnivariatePolynomial:
    """Sum of coefficient * c**l over terms x^k y^l maximizing k + l*h."""
    best = max(k + l * h for (k, l) in support(p))
    dense: dict[int, int] = {}
    for (k, l), coeff in p.items():
        if k + l * h == best:
            dense[l] = coeff
    return UnivariatePolynomial(dense.get(i, 0) for i in range(max(dense) + 1))


def edge_polynomial(theta: Polynomial, cls: PuiseuxClass) -> UnivariatePolynomial:
    """Leading-coefficient equation in c for the roots of ``cls``."""
    return face_polynomial(theta, cls.h)


def k_value(source: Iterable[Sequence[int]], h: Fraction) -> Fraction:
    """max(k + l*h) over the points (k, l) of ``source``."""
    return max(Fraction(k) + l * Fraction(h) for k, l in source)


@dataclass(frozen=True)
class DegreeReport:
    eliminate: str
    m: int
    n: int
    b: int
    classes: tuple[PuiseuxClass, ...]
    k_values: tuple[Fraction, ...]
    degree: int
    warnings: tuple[str, ...] = ()
    standard_form: bool = True

    @property
    def h_values(self) -> tuple[Fraction, ...]:
        return tuple(c.h for c in self.classes for _ in range(c.multiplicity))

    def to_json(self) -> dict:
        return {
            "eliminate": self.eliminate,
            "m": self.m,
            "n": self.n,
            "b": self.b,
            "classes": [c.to_json() for c in self.classes],
            "k_values": [_frac_text(k) for k in self.k_values],
            "degree": self.degree,
            "warnings": list(self.warnings),
            "standard_form": self.standard_form,
        }

    @classmethod
    def from_json(cls, data: dict) -> "DegreeReport":
        classes = tuple(
            PuiseuxClass(Fraction(c["h"]), c["mult"], tuple(c["edge"])) for c in data["classes"]
        )
        return cls(
            eliminate=data.get("eliminate", "y"),
            m=data["m"],
            n=data["n"],
            b=data["b"],
            classes=classes,
            k_values=tuple(Fraction(k) for k in data["k_values"]),
            degree=data["degree"],
            warnings=tuple(data.get("warnings", ())),
            standard_form=data.get("standard_form", True),
        )

    def strip_edge_polynomials(self) -> "DegreeReport":
        return replace(self, classes=tuple(replace(c, edge_polynomial=None) for c in self.classes))


def orient(p: Polynomial, eliminate: str) -> Polynomial:
    """Rewrite ``p`` so the eliminated variable is y."""
    if eliminate == "y":
        return p
    if eliminate == "x":
        return p.swap_variables()
    raise ValueError(f"eliminate must be 'x' or 'y', got {eliminate!r}")


def newton_polygon(p: Polynomial) -> LatticePolygon:
    if p.is_zero():
        raise PreconditionError("the zero polynomial has no Newton polygon")
    return convex_hull(support(p))


def _strip_zero_root(u: UnivariatePolynomial) -> UnivariatePolynomial:
    v = u.valuation() or 0
    return UnivariatePolynomial(u.coefficients[v:])


def shares_nonzero_root(u: UnivariatePolynomial, v: UnivariatePolynomial) -> bool:
    """True if u and v have a common root c != 0 (their resultant vanishes)."""
    a, b = _strip_zero_root(u), _strip_zero_root(v)
    if a.is_constant() or b.is_constant():
        return False
    return sylvester_determinant(list(reversed(a.coefficients)), list(reversed(b.coefficients))) == 0


def minding_degree(
    f: Polynomial, theta: Polynomial, eliminate: str = "y", k_source: str = "support"
) -> DegreeReport:
    """Predict deg of the eliminant as m*b + k_1 + ... + k_n.

    Hard preconditions (after orienting): both inputs nonzero, theta has
    positive degree n in the eliminated variable, and both Newton polygons
    contain the origin.  If f's polygon lacks the full left edge the formula
    is still evaluated, but it no longer coincides with the mixed area and a
    warning says so.
    """
    if k_source not in K_SOURCES:
        raise ValueError(f"k_source must be one of {K_SOURCES}")
    if f.is_zero() or theta.is_zero():
        raise PreconditionError("inputs must be nonzero polynomials")
    f, theta = orient(f, eliminate), orient(theta, eliminate)
    m, n = degree_in(f, "y"), degree_in(theta, "y")
    if n == 0:
        raise PreconditionError(f"theta does not involve {eliminate}: nothing to eliminate")
    P1, P2 = newton_polygon(f), newton_polygon(theta)
    if not P1.contains((0, 0)):
        raise PreconditionError("Newton polygon of f must contain the origin (f needs a constant term)")
    if not P2.contains((0, 0)):
        raise PreconditionError("Newton polygon of theta must contain the origin (theta needs a constant term)")

    warnings = []
    shape = is_minding_form(P1)
    if not shape:
        warnings.append(f"f's polygon is not in standard form ({shape.reason}); prediction may differ from the mixed area")

    B0 = coefficient_slice(theta, "y", n)
    b = B0.degree
    source = support(f) if k_source == "support" else P1.lattice_points()

    classes = []
    k_values: list[Fraction] = []
    total = Fraction(m * b)
    for cls in right_edge_classes(P2):
        e_theta = edge_polynomial(theta, cls)
        classes.append(replace(cls, edge_polynomial=e_theta))
        k = k_value(source, cls.h)
        k_values.extend([k] * cls.multiplicity)
        total += cls.multiplicity * k
        if shares_nonzero_root(e_theta, face_polynomial(f, cls.h)):
            warnings.append(
                f"edge polynomials of f and theta share a root for h={_frac_text(cls.h)}: "
                "coefficients are not generic, the degree may drop"
            )
    if sum(c.multiplicity for c in classes) != n:
        raise InvariantError("root class multiplicities do not add up to the degree of theta")
    if total.denominator != 1:
        raise InvariantError(f"predicted degree {total} is not an integer")
    return DegreeReport(
        eliminate=eliminate,
        m=m,
        n=n,
        b=b,
        classes=tuple(classes),
        k_values=tuple(k_values),
        degree=int(total),
        warnings=tuple(warnings),
        standard_form=bool(shape),
    )


def mixed_area_minding(P1: LatticePolygon, P2: LatticePolygon) -> Fraction:
    """m*b + sum of m_i * k_i computed from the polygons alone.

    Requires P1 in standard form and P2 in the first quadrant with the origin.
    """
    shape = is_minding_form(P1)
    if not shape:
        raise PreconditionError(f"P1: {shape.reason}")
    if any(x < 0 or y < 0 for x, y in P2.vertices) or not P2.contains((0, 0)):
        raise PreconditionError("P2 must lie in the first quadrant and contain the origin")
    m = max(y for _, y in P1.vertices)
    n = max(y for _, y in P2.vertices)
    b = max(x for x, y in P2.vertices if y == n)
    if len(P2.vertices) < 2:
        return Fraction(0)
    pts = P1.vertices
    return m * b + sum(c.multiplicity * k_value(pts, c.h) for c in right_edge_classes(P2))
