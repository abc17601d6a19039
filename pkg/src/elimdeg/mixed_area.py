"""Mixed area of two lattice polygons, and the classical degree bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .geometry import LatticePolygon, convex_hull, dot, edges, minkowski_sum, normalized_area
from .polynomial import Polynomial, coefficient_slice, degree_in, support

METHODS = ("dilation", "ie", "recursion", "subdivision", "minding")


@dataclass(frozen=True)
class MixedAreaResult:
    value: Fraction
    method: str


def mixed_area_ie(P: LatticePolygon, Q: LatticePolygon) -> Fraction:
    """Area(P + Q) - Area(P) - Area(Q)."""
    return normalized_area(minkowski_sum(P, Q)) - normalized_area(P) - normalized_area(Q)


def mixed_area_recursion(P: LatticePolygon, Q: LatticePolygon) -> Fraction:
    """Sum over edges F of Q of max over P of u . tilde_nu(F).

    A point Q has no edges and gives 0.
    """
    if len(Q.vertices) < 2:
        return Fraction(0)
    return Fraction(sum(max(dot(u, e.tilde_nu) for u in P.vertices) for e in edges(Q)))


def mixed_area_dilation(P: LatticePolygon, Q: LatticePolygon) -> Fraction:
    """Coefficient of lam*mu in Area(lam*P + mu*Q), fitted from three samples.

    With A(l, u) = l^2 A1 + l u M + u^2 A2 one has
    M = 5 A(1,1) - A(2,1) - A(1,2).
    """

    def area(lam, mu):
        return normalized_area(minkowski_sum(P.scale(lam), Q.scale(mu)))

    return 5 * area(1, 1) - area(2, 1) - area(1, 2)


def mixed_area_subdivision(P: LatticePolygon, Q: LatticePolygon) -> Fraction:
    from .subdivision import subdivide

    return subdivide(P, Q).mixed_area()


def mixed_area(P: LatticePolygon, Q: LatticePolygon, method: str = "ie") -> MixedAreaResult:
    if method == "ie":
        value = mixed_area_ie(P, Q)
    elif method == "recursion":
        value = mixed_area_recursion(P, Q)
    elif method == "dilation":
        value = mixed_area_dilation(P, Q)
    elif method == "subdivision":
        value = mixed_area_subdivision(P, Q)
    elif method == "minding":
        from .puiseux import mixed_area_minding

        value = mixed_area_minding(P, Q)
    else:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    return MixedAreaResult(Fraction(value), method)


def all_methods(P: LatticePolygon, Q: LatticePolygon) -> dict[str, Fraction | None]:
    """Every applicable method; ``None`` where preconditions fail."""
    out: dict[str, Fraction | None] = {}
    for method in METHODS:
        try:
            out[method] = mixed_area(P, Q, method).value
        except PreconditionError:
            out[method] = None
    return out


def _require_nonzero(*polys):
    if any(p.is_zero() for p in polys):
        raise PreconditionError("inputs must be nonzero polynomials")


def bezout_bound(f: Polynomial, theta: Polynomial) -> int:
    _require_nonzero(f, theta)
    return f.total_degree() * theta.total_degree()


@dataclass(frozen=True)
class FinckResult:
    degree: int | None
    reason: str = ""
    ignored: tuple[str, ...] = ()

    @property
    def applicable(self) -> bool:
        return self.degree is not None

    def to_json(self):
        return self.degree if self.applicable else "n/a"


def _uniform_degree(p: Polynomial, name: str):
    top = degree_in(p, "y")
    degs, ignored = {}, []
    for i in range(top + 1):
        s = coefficient_slice(p, "y", top - i)
        if s.is_zero():
            ignored.append(f"{name}_{i}")
        else:
            degs[i] = s.degree
    first = degs[0]
    for i, d in degs.items():
        if d != first:
            return top, None, f"{name}_{i} has degree {d}, {name}_0 has degree {first}", ignored
    return top, first, "", ignored


def finck_degree(f: Polynomial, theta: Polynomial) -> FinckResult:
    """m*n' + n*m' when every nonzero A_i has degree m' and every B_j degree n'."""
    _require_nonzero(f, theta)
    m, mp, why_f, ign_f = _uniform_degree(f, "A")
    n, np_, why_t, ign_t = _uniform_degree(theta, "B")
    ignored = tuple(ign_f + ign_t)
    if mp is None or np_ is None:
        return FinckResult(None, why_f or why_t, ignored)
    return FinckResult(m * np_ + n * mp, "", ignored)


def li_wang_bound(f: Polynomial, theta: Polynomial) -> int:
    """Mixed area of the Newton polygons enlarged by the origin."""
    _require_nonzero(f, theta)
    P = convex_hull(set(support(f)) | {(0, 0)})
    Q = convex_hull(set(support(theta)) | {(0, 0)})
    value = mixed_area_ie(P, Q)
    assert value.denominator == 1
    return int(value)


def bounds_report(f: Polynomial, theta: Polynomial) -> dict:
    from .puiseux import newton_polygon

    P, Q = newton_polygon(f), newton_polygon(theta)
    values = {k: v for k, v in all_methods(P, Q).items() if v is not None}
    agree = len(set(values.values())) == 1
    return {
        "bezout": bezout_bound(f, theta),
        "finck": finck_degree(f, theta).to_json(),
        "li_wang": li_wang_bound(f, theta),
        "mixed_area": int(values["ie"]),
        "methods_agree": agree,
    }
