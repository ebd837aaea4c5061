"""Circulant matrices over the complex numbers.

An order-n circulant is determined by its first row (c_1, ..., c_n): each
later row is the previous one rotated once to the right, so the (i, j)
entry is c_{j-i+1} with subscripts taken mod n (residue 0 means index n).
Under matrix addition and product the circulants form a commutative
n-dimensional algebra, and the product corresponds to cyclic convolution
of first rows.  Equivalently, a circulant is the element
c_1 e_1 + ... + c_n e_n of the cyclic group algebra with basis products
e_i e_j = e_{i+j-1}.

Formulas in docstrings are 1-based like the literature; storage is
0-based.
"""

from __future__ import annotations

import cmath
import numbers
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InvalidOrderError, InvalidScalarError


def _as_scalar(value) -> complex:
    if isinstance(value, numbers.Number):
        z = complex(value)
        if not cmath.isfinite(z):
            raise InvalidScalarError(f"non-finite entry {value!r}")
        return z
    raise InvalidScalarError(f"cannot use {type(value).__name__} as a matrix entry")


@dataclass(frozen=True)
class Circulant:
    """Immutable circulant matrix, stored as its first row."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise InvalidOrderError("a circulant needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(_as_scalar(c) for c in self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def to_dense(self) -> np.ndarray:
        """Expand to the full n x n array with entry (i, j) = c_{j-i+1 mod n}."""
        n = self.n
        shift = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
        return np.asarray(self.coeffs, dtype=complex)[shift]

    def transpose(self) -> "Circulant":
        """circ(c_1, c_n, c_{n-1}, ..., c_2); matches the dense transpose."""
        c = self.coeffs
        return Circulant(c[:1] + c[1:][::-1])

    def norm_inf(self) -> float:
        """Induced infinity norm of the dense form: every row sums to sum |c_i|."""
        return float(sum(abs(c) for c in self.coeffs))

    def __add__(self, other: "Circulant") -> "Circulant":
        if not isinstance(other, Circulant):
            return NotImplemented
        _check_orders(self, other)
        return Circulant(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Circulant") -> "Circulant":
        if not isinstance(other, Circulant):
            return NotImplemented
        _check_orders(self, other)
        return Circulant(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Circulant":
        return Circulant(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Circulant):
            return mul_naive(self, other)
        if isinstance(other, numbers.Number):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self.scale(other)
        return NotImplemented

    def scale(self, a) -> "Circulant":
        a = _as_scalar(a)
        return Circulant(tuple(a * c for c in self.coeffs))

    def __repr__(self) -> str:
        return "circ(%s)" % ", ".join(_fmt(c) for c in self.coeffs)


def _fmt(z: complex) -> str:
    return repr(z.real) if z.imag == 0 else repr(z)


def _check_orders(x: Circulant, y: Circulant):
    if x.n != y.n:
        raise DimensionMismatchError(f"orders differ: {x.n} vs {y.n}")


def circ(*coeffs) -> Circulant:
    """Build circ(c_1, ..., c_n) from scalars or a single iterable."""
    if len(coeffs) == 1 and not isinstance(coeffs[0], numbers.Number):
        coeffs = tuple(coeffs[0])
    return Circulant(tuple(coeffs))


def identity(n: int) -> Circulant:
    """circ(1, 0, ..., 0), the multiplicative identity."""
    if n < 1:
        raise InvalidOrderError(f"order must be >= 1, got {n}")
    return Circulant((1.0 + 0.0j,) + (0.0 + 0.0j,) * (n - 1))


def fundamental(n: int) -> Circulant:
    """The cyclic-shift permutation P_n = circ(0, 1, 0, ..., 0).

    P_n generates the whole algebra: P_n^n = I_n and
    circ(c_1, ..., c_n) = c_1 I + c_2 P_n + ... + c_n P_n^(n-1).
    For n = 1 this degenerates to circ(1).
    """
    if n < 1:
        raise InvalidOrderError(f"order must be >= 1, got {n}")
    if n == 1:
        return identity(1)
    row = [0.0 + 0.0j] * n
    row[1] = 1.0 + 0.0j
    return Circulant(tuple(row))


def linear_combine(a, x: Circulant, b, y: Circulant) -> Circulant:
    """Coefficientwise a*x + b*y."""
    _check_orders(x, y)
    a, b = _as_scalar(a), _as_scalar(b)
    return Circulant(tuple(a * xc + b * yc for xc, yc in zip(x.coeffs, y.coeffs)))


def mul_naive(x: Circulant, y: Circulant) -> Circulant:
    """Reference O(n^2) product: cyclic convolution of first rows.

    r_k = sum of x_i y_j over i + j - 1 = k (mod n), which is the first
    row of the dense matrix product.
    """
    _check_orders(x, y)
    n = x.n
    out = [0.0 + 0.0j] * n
    for i, xi in enumerate(x.coeffs):
        if xi == 0:
            continue
        for j, yj in enumerate(y.coeffs):
            k = i + j
            if k >= n:
                k -= n
            out[k] += xi * yj
    return Circulant(tuple(out))


def transpose(c: Circulant) -> Circulant:
    """Module-level alias for :meth:`Circulant.transpose`."""
    return c.transpose()
