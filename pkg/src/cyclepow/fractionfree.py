"""Fraction-free integer elimination: exact determinants and linear solves.

One-step (Bareiss-style) elimination keeps every intermediate entry an exact
integer -- each is a minor of the input -- so there is no rational blow-up
mid-run and no rounding ever.  Rationals appear only in the final
back-substitution of the solver.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ConsistencyError

__all__ = ["determinant", "solve"]


def _forward(aug: list[list[int]], width: int) -> int | None:
    """Eliminate below the diagonal in place; return the row-swap sign.

    Returns None if some pivot column is entirely zero (singular matrix).
    Every division below is exact by construction; a nonzero remainder means
    the input was not integral.
    """
    n = len(aug)
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot_row is None:
            return None
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
            sign = -sign
        pivot = aug[col][col]
        base = aug[col]
        for r in range(col + 1, n):
            row = aug[r]
            lead = row[col]
            for c in range(col + 1, width):
                quotient, remainder = divmod(pivot * row[c] - lead * base[c], prev)
                if remainder:
                    raise ConsistencyError("fraction-free step left a remainder")
                row[c] = quotient
            row[col] = 0
        prev = pivot
    return sign


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix (1 for the empty matrix)."""
    n = len(rows)
    if n == 0:
        return 1
    aug = [[int(entry) for entry in row] for row in rows]
    sign = _forward(aug, n)
    if sign is None:
        return 0
    return sign * aug[n - 1][n - 1]


def solve(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Exact solution of a nonsingular integer system A x = b.

    Forward elimination stays in integers; back-substitution produces
    Fractions.  Raises ConsistencyError when the matrix is singular.
    """
    n = len(rows)
    if len(rhs) != n:
        raise ConsistencyError("right-hand side length does not match the matrix")
    aug = [[int(entry) for entry in row] + [int(b)] for row, b in zip(rows, rhs)]
    if _forward(aug, n + 1) is None or aug[n - 1][n - 1] == 0:
        raise ConsistencyError("system is singular")
    solution: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n])
        for j in range(i + 1, n):
            acc -= aug[i][j] * solution[j]
        solution[i] = acc / aug[i][i]
    return solution
