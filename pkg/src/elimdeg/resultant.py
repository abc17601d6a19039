"""Ground truth for the predicted degrees: exact Sylvester resultants.

``resultant_polynomial(f, theta, "y")`` is Res_y(f, theta), the determinant
of the Sylvester matrix with the rows of f first.  It differs from the
eliminant B_0^m * prod f(x, y_i) only by the sign (-1)^(m*n), so it has the
same degree and the same factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CommonFactorError, PreconditionError
from .linalg import bareiss_determinant, interpolate, laplace_determinant, sample_points, sylvester_matrix
from .polynomial import (
    Polynomial,
    UnivariatePolynomial,
    coefficient_slice,
    degree_in,
    leading_slice,
    multiplicity,
    univariate_gcd,
)
from .puiseux import minding_degree, orient


def _slices(p: Polynomial) -> list[UnivariatePolynomial]:
    """y-coefficients of p, highest power first."""
    d = degree_in(p, "y")
    return [coefficient_slice(p, "y", d - i) for i in range(d + 1)]


def sylvester_polynomial_matrix(f: Polynomial, theta: Polynomial, eliminate: str = "y"):
    """Sylvester matrix in the eliminated variable, entries univariate polynomials."""
    f, theta = orient(f, eliminate), orient(theta, eliminate)
    return sylvester_matrix(_slices(f), _slices(theta), zero=UnivariatePolynomial())


def _degree_bound(f: Polynomial, theta: Polynomial) -> int:
    return degree_in(f, "x") * degree_in(theta, "y") + degree_in(theta, "x") * degree_in(f, "y")


def _check_inputs(f, theta, eliminate):
    if f.is_zero() or theta.is_zero():
        raise PreconditionError("inputs must be nonzero polynomials")
    f, theta = orient(f, eliminate), orient(theta, eliminate)
    if degree_in(f, "y") == 0 and degree_in(theta, "y") == 0:
        raise PreconditionError(f"{eliminate} appears in neither input")
    return f, theta


def raw_resultant(f: Polynomial, theta: Polynomial, eliminate: str = "y") -> UnivariatePolynomial:
    """Res(f, theta) by evaluation at D+1 integers and exact interpolation.

    May return the zero polynomial; :func:`resultant_polynomial` rejects that.
    """
    f, theta = _check_inputs(f, theta, eliminate)
    matrix = sylvester_matrix(_slices(f), _slices(theta), zero=UnivariatePolynomial())
    D = _degree_bound(f, theta)
    xs = sample_points(D + 1)
    values = [bareiss_determinant([[entry(x0) for entry in row] for row in matrix]) for x0 in xs]
    coeffs = interpolate(xs, values)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated resultant has non-integer coefficients")
    return UnivariatePolynomial(int(c) for c in coeffs)


def resultant_polynomial(f: Polynomial, theta: Polynomial, eliminate: str = "y", primitive: bool = False):
    """Res(f, theta) in the remaining variable; raises if it vanishes identically."""
    res = raw_resultant(f, theta, eliminate)
    if res.is_zero():
        raise CommonFactorError("resultant is identically zero: f and theta share a nonconstant factor")
    return res.primitive() if primitive else res


def resultant_degree(f: Polynomial, theta: Polynomial, eliminate: str = "y") -> int:
    return resultant_polynomial(f, theta, eliminate).degree


def symbolic_resultant(f: Polynomial, theta: Polynomial, eliminate: str = "y") -> UnivariatePolynomial:
    """Cofactor expansion of the polynomial Sylvester matrix; for small m+n only."""
    f, theta = _check_inputs(f, theta, eliminate)
    matrix = sylvester_matrix(_slices(f), _slices(theta), zero=UnivariatePolynomial())
    return laplace_determinant(matrix, UnivariatePolynomial(), UnivariatePolynomial([1]))


def swap_identity_check(f: Polynomial, theta: Polynomial, eliminate: str = "y") -> bool:
    """Res(f, theta) == (-1)^(m n) Res(theta, f), both computed from scratch."""
    fo, to = orient(f, eliminate), orient(theta, eliminate)
    m, n = degree_in(fo, "y"), degree_in(to, "y")
    forward = raw_resultant(f, theta, eliminate)
    backward = raw_resultant(theta, f, eliminate)
    return forward == backward * (-1) ** (m * n)


@dataclass(frozen=True)
class ComparisonReport:
    eliminate: str
    predicted: int
    actual: int
    common_factor_x: UnivariatePolynomial
    common_factor_y: UnivariatePolynomial
    psi_divisibility: int
    warnings: tuple[str, ...] = ()

    @property
    def drop(self) -> int:
        return self.predicted - self.actual

    @property
    def final_variable(self) -> str:
        return "x" if self.eliminate == "y" else "y"

    @property
    def relevant_factor(self) -> UnivariatePolynomial:
        """Common factor living in the variable of the final equation."""
        return self.common_factor_x if self.final_variable == "x" else self.common_factor_y

    def to_json(self) -> dict:
        return {
            "eliminate": self.eliminate,
            "predicted": self.predicted,
            "actual": self.actual,
            "drop": self.drop,
            "gcd_x": self.common_factor_x.to_text("x"),
            "gcd_y": self.common_factor_y.to_text("y"),
            "psi_divisibility": self.psi_divisibility,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ComparisonReport":
        from .polynomial import parse_polynomial

        def upoly(text, var):
            p = parse_polynomial(text)
            if var == "y":
                p = p.swap_variables()
            return coefficient_slice(p, "y", 0)

        return cls(
            eliminate=data.get("eliminate", "y"),
            predicted=data["predicted"],
            actual=data["actual"],
            common_factor_x=upoly(data["gcd_x"], "x"),
            common_factor_y=upoly(data["gcd_y"], "y"),
            psi_divisibility=data["psi_divisibility"],
            warnings=tuple(data.get("warnings", ())),
        )


def leading_factor_gcds(f: Polynomial, theta: Polynomial):
    """gcd(A_0, B_0) in x and gcd(alpha_0, beta_0) in y."""
    gx = univariate_gcd(leading_slice(f, "y"), leading_slice(theta, "y"))
    gy = univariate_gcd(leading_slice(f, "x"), leading_slice(theta, "x"))
    return gx, gy


def check_prediction(
    f: Polynomial, theta: Polynomial, eliminate: str = "y", k_source: str = "support"
) -> ComparisonReport:
    report = minding_degree(f, theta, eliminate, k_source)
    psi = resultant_polynomial(f, theta, eliminate)
    gx, gy = leading_factor_gcds(f, theta)
    relevant = gx if eliminate == "y" else gy
    return ComparisonReport(
        eliminate=eliminate,
        predicted=report.degree,
        actual=psi.degree,
        common_factor_x=gx,
        common_factor_y=gy,
        psi_divisibility=multiplicity(relevant, psi),
        warnings=report.warnings,
    )


def _by_direction(reports) -> dict[str, ComparisonReport]:
    if isinstance(reports, ComparisonReport):
        reports = [reports]
    out = {}
    for r in reports:
        if r.eliminate in out:
            raise ValueError(f"two reports eliminate {r.eliminate}")
        out[r.eliminate] = r
    return out


def finite_solution_accounting(generic, degenerate) -> dict:
    """Compare a generic system with a degeneration of it, per final equation.

    ``escaped`` counts roots the final equation loses (they went to
    infinity); ``absorbed`` counts the degree of ψ taken by the common
    leading factor, which corresponds to no solution; ``finite`` is what
    is left.
    """
    gen, deg = _by_direction(generic), _by_direction(degenerate)
    if set(gen) != set(deg):
        raise ValueError("generic and degenerate reports cover different variables")
    out = {}
    for elim in sorted(gen):
        g, d = gen[elim], deg[elim]
        factor = d.relevant_factor
        absorbed = (factor.degree or 0) * d.psi_divisibility
        out[d.final_variable] = {
            "generic_degree": g.actual,
            "degenerate_degree": d.actual,
            "escaped": g.actual - d.actual,
            "common_factor": factor.to_text(d.final_variable),
            "absorbed": absorbed,
            "finite": d.actual - absorbed,
        }
    return out
