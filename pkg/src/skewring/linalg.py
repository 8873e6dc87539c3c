"""Exact Gaussian elimination over the rationals.

Matrices are tuples/lists of rows of Fractions. Everything here is
small (dimension at most a few dozen), so plain row reduction wins over
any dependency.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def identity_matrix(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_vec(matrix, vector):
    return [sum((row[j] * vector[j] for j in range(len(vector))), ZERO) for row in matrix]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum((a[i][k] * b[k][j] for k in range(inner)), ZERO) for j in range(cols)]
        for i in range(rows)
    ]


def solve(matrix, rhs):
    """Solve matrix·x = rhs exactly; return a solution or None if inconsistent.

    The system may be rectangular or singular; free variables are set to 0.
    """
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    n_cols = len(matrix[0]) if matrix else 0
    pivot_cols = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [v - factor * p for v, p in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][n_cols] != 0:
            return None
    solution = [ZERO] * n_cols
    for row_idx, c in enumerate(pivot_cols):
        solution[c] = rows[row_idx][n_cols]
    return solution


def invert_matrix(matrix):
    """Exact inverse of a square matrix, or None if singular."""
    n = len(matrix)
    aug = [list(row) + ident for row, ident in zip(matrix, identity_matrix(n))]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            return None
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = ONE / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [v - factor * p for v, p in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]
