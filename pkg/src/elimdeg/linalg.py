"""Exact integer linear algebra used by the resultant oracle."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, TypeVar

T = TypeVar("T")


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def sylvester_matrix(p: Sequence[T], q: Sequence[T], zero: T = 0) -> list[list[T]]:
    """Sylvester matrix of p and q given highest-degree-first coefficients.

    With deg p = m and deg q = n the matrix has n shifted rows of p followed
    by m shifted rows of q.
    """
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(p) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(q) + [zero] * (size - n - 1 - i))
    return rows


def sylvester_determinant(p: Sequence[int], q: Sequence[int]) -> int:
    """Res(p, q) for integer coefficient lists, highest degree first."""
    return bareiss_determinant(sylvester_matrix(p, q))


def laplace_determinant(matrix, zero, one):
    """Cofactor expansion along the first row; any ring with + - *."""
    n = len(matrix)
    if n == 0:
        return one
    if n == 1:
        return matrix[0][0]
    total = zero
    for j, entry in enumerate(matrix[0]):
        if entry == zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * laplace_determinant(minor, zero, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (lowest degree first) of the polynomial through the points."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # Newton form -> monomial basis
    out = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # out = out * (t - xs[i]) + coef[i]
        shifted = [Fraction(0)] + out[:-1]
        out = [shifted[k] - xs[i] * out[k] for k in range(n)]
        out[0] += coef[i]
    return out


def sample_points(count: int) -> list[int]:
    """0, 1, -1, 2, -2, ... (``count`` distinct integers)."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts[:count]
