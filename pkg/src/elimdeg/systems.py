"""Ready-made polynomial systems used by the scripts, the CLI and the tests."""

from __future__ import annotations

import random

from .polynomial import Polynomial, parse_pattern, random_nonzero

# f and theta of the pentagon example: coefficient blocks of unequal degree
WORKED_F = "(x^2)*y^4+(x^2)*y^3+(x^4)*y^2+(x^5)*y+(x^5)"
WORKED_THETA = "(x^8)*y^5+(x^6)*y^4+(x^9)*y^3+(x^4)*y^2+(x^3)*y+(x^4)"

SPARSE_NAMES = ("a", "b", "c", "e", "g", "h", "k", "l", "beta", "gamma", "delta", "lambda", "mu")


def derive_seed(seed: int, index: int) -> int:
    """Distinct seed for the index-th input of a system."""
    return seed * 1_000_003 + index


def patterns(texts, seed: int = 0, bound: int = 99) -> list[Polynomial]:
    return [parse_pattern(t, derive_seed(seed, i), bound) for i, t in enumerate(texts)]


def worked_system(seed: int = 0, bound: int = 99) -> tuple[Polynomial, Polynomial]:
    f, theta = patterns([WORKED_F, WORKED_THETA], seed, bound)
    return f, theta


def sparse_coefficients(seed: int = 0, bound: int = 99, **overrides) -> dict[str, int]:
    rng = random.Random(seed)
    coeffs = {name: random_nonzero(rng, bound) for name in SPARSE_NAMES}
    coeffs.update(overrides)
    return coeffs


def sparse_system(coeffs: dict[str, int]) -> tuple[Polynomial, Polynomial]:
    """f = (a+bx^2)y^4 + (c+ex)y^2 + gx^3y + h + kx^2 + lx^3,
    theta = beta x^5 y^2 + (gamma + delta x^2) y + lambda + mu x^4."""
    c = coeffs
    f = Polynomial.from_items(
        [
            ((0, 4), c["a"]),
            ((2, 4), c["b"]),
            ((0, 2), c["c"]),
            ((1, 2), c["e"]),
            ((3, 1), c["g"]),
            ((0, 0), c["h"]),
            ((2, 0), c["k"]),
            ((3, 0), c["l"]),
        ]
    )
    theta = Polynomial.from_items(
        [
            ((5, 2), c["beta"]),
            ((0, 1), c["gamma"]),
            ((2, 1), c["delta"]),
            ((0, 0), c["lambda"]),
            ((4, 0), c["mu"]),
        ]
    )
    return f, theta


def shared_edge_system(a: int, b: int, c: int, d: int) -> tuple[Polynomial, Polynomial]:
    """f = a y^4 + x^2 y^3 + x^3 y^2 + b,  theta = c y^4 + x^2 y^3 + x^2 y^2 + d."""
    f = Polynomial({(0, 4): a, (2, 3): 1, (3, 2): 1, (0, 0): b})
    theta = Polynomial({(0, 4): c, (2, 3): 1, (2, 2): 1, (0, 0): d})
    return f, theta


def uniform_degree_system(m: int, n: int, mp: int, np_: int, seed: int = 0, bound: int = 99):
    """Every y-coefficient of f dense of degree mp, of theta dense of degree np_."""
    f_text = "+".join(f"(x^{mp})*y^{i}" for i in range(m, -1, -1))
    t_text = "+".join(f"(x^{np_})*y^{j}" for j in range(n, -1, -1))
    f, theta = patterns([f_text, t_text], seed, bound)
    return f, theta
