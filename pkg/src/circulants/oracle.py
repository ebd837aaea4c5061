"""Independent reference computations used to validate the other modules.

Nothing here calls into the circulant modules; inputs are plain numpy
arrays or grids of Fractions.  These run at desk scale only (n <= 64
floating, n <= 16 exact).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatchError, InvalidVectorError, SingularMatrixError


@dataclass(frozen=True)
class OracleReport:
    name: str
    passed: bool
    max_deviation: float
    location: str | None = None


def dense_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Plain dense matrix product."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def faddeev_leverrier(a: np.ndarray) -> tuple[complex, ...]:
    """Monic characteristic polynomial by the trace recurrence, O(n^4).

    Returns coefficients in descending powers: (1, m_1, ..., m_n) for
    X^n + m_1 X^(n-1) + ... + m_n.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"square matrix required, got {a.shape}")
    n = a.shape[0]
    eye = np.eye(n, dtype=complex)
    coeffs = [1.0 + 0.0j]
    m = np.zeros_like(a)
    c = 1.0 + 0.0j  # c_0: M_1 = A (M_0 + c_0 I) = A
    for k in range(1, n + 1):
        m = a @ (m + c * eye)
        c = -np.trace(m) / k
        coeffs.append(complex(c))
    return tuple(coeffs)


def faddeev_leverrier_exact(grid) -> tuple[Fraction, ...]:
    """Exact-rational variant of the trace recurrence."""
    rows = [[Fraction(x) for x in row] for row in grid]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionMismatchError("square grid required")
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    c = Fraction(1)
    for k in range(1, n + 1):
        shifted = [
            [m[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)
        ]
        m = [
            [sum(rows[i][t] * shifted[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        c = -sum(m[i][i] for i in range(n)) / k
        coeffs.append(c)
    return tuple(coeffs)


def exact_det(grid) -> Fraction:
    """Determinant by fraction elimination with row pivoting."""
    rows = [[Fraction(x) for x in row] for row in grid]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionMismatchError("square grid required")
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            det = -det
        pivot = rows[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = rows[i][k] / pivot
            if factor:
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[k])]
    return det


def exact_inverse(grid) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse by Gauss-Jordan with full pivoting over Fractions."""
    rows = [[Fraction(x) for x in row] for row in grid]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionMismatchError("square grid required")
    aug = [rows[i] + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    col_perm = list(range(n))
    for k in range(n):
        pivot = max(
            ((i, j) for i in range(k, n) for j in range(k, n)),
            key=lambda ij: abs(aug[ij[0]][ij[1]]),
        )
        if aug[pivot[0]][pivot[1]] == 0:
            raise SingularMatrixError("exact determinant is zero")
        i, j = pivot
        aug[k], aug[i] = aug[i], aug[k]
        if j != k:
            for row in aug:
                row[k], row[j] = row[j], row[k]
            col_perm[k], col_perm[j] = col_perm[j], col_perm[k]
        inv_pivot = 1 / aug[k][k]
        aug[k] = [x * inv_pivot for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                factor = aug[i][k]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[k])]
    # Column swaps inverted A*P, so row k of the result is row perm[k] of A^-1.
    result: list[tuple[Fraction, ...] | None] = [None] * n
    for k in range(n):
        result[col_perm[k]] = tuple(aug[k][n:])
    return tuple(result)  # type: ignore[arg-type]


def eigen_residual(a: np.ndarray, lam: complex, x: np.ndarray) -> float:
    """Scale-aware residual ||A x - lam x||_inf / (1 + ||A||_inf ||x||_inf)."""
    a = np.asarray(a, dtype=complex)
    x = np.asarray(x, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or x.shape != (a.shape[0],):
        raise DimensionMismatchError(f"shapes {a.shape} and {x.shape} do not agree")
    if not np.any(x):
        raise InvalidVectorError("eigenvector candidate is identically zero")
    residual = np.max(np.abs(a @ x - lam * x))
    a_norm = np.max(np.sum(np.abs(a), axis=1))
    x_norm = np.max(np.abs(x))
    return float(residual / (1.0 + a_norm * x_norm))


def greedy_multiset_match(left, right, tol: float) -> float | None:
    """Greedy nearest-neighbour pairing of two complex multisets.

    Returns the largest paired distance, or None if some value cannot be
    matched within tol (a failed matching must never pass silently).
    """
    left = [complex(v) for v in left]
    remaining = [complex(v) for v in right]
    if len(left) != len(remaining):
        return None
    worst = 0.0
    for v in left:
        dists = [abs(v - w) for w in remaining]
        best = int(np.argmin(dists))
        if dists[best] > tol:
            return None
        worst = max(worst, dists[best])
        remaining.pop(best)
    return worst
