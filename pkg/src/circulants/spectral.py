"""Spectral theory of circulants: DFT diagonalization and the fast product.

With omega = cos(2*pi/n) + i*sin(2*pi/n) and the representer polynomial
p_C(X) = c_1 + c_2 X + ... + c_n X^(n-1), the eigenvalues of
C = circ(c_1, ..., c_n) are lambda_j = p_C(omega^(j-1)) for j = 1..n,
with eigenvector x_j = (1, omega^(j-1), omega^(2(j-1)), ...).  Mapping C
to diag(lambda_1, ..., lambda_n) is an algebra isomorphism onto the
diagonal matrices, so sums and products of circulants act pointwise on
spectra; that gives the O(n log n) multiplication path.

The transform here is hand-rolled: an iterative radix-2 FFT for
power-of-two orders and direct evaluation at the omega powers otherwise.
Slot order is always j = 1..n; spectra are never sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import Circulant, _as_scalar, _check_orders


@dataclass(frozen=True)
class FourierContext:
    """Primitive n-th root of unity omega and its power table."""

    n: int
    omega: complex
    powers: tuple[complex, ...]

    def power_array(self) -> np.ndarray:
        return np.asarray(self.powers, dtype=complex)


@lru_cache(maxsize=None)
def fourier_context(n: int) -> FourierContext:
    powers = np.exp(2j * np.pi * np.arange(n) / n)
    return FourierContext(n=n, omega=complex(powers[min(1, n - 1)]), powers=tuple(powers.tolist()))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in slot order: values[j-1] = p_C(omega^(j-1))."""

    values: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_as_scalar(v) for v in self.values))

    @property
    def n(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=complex)


def _bit_reversed_indices(n: int) -> np.ndarray:
    levels = n.bit_length() - 1
    rev = np.zeros(n, dtype=np.intp)
    idx = np.arange(n)
    for _ in range(levels):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    return rev


def _fft_pow2(vec: np.ndarray, sign: int) -> np.ndarray:
    # Iterative Cooley-Tukey, decimation in time.  sign +1 evaluates at
    # the omega powers (the eigenvalue convention), -1 at their conjugates.
    n = vec.size
    if n == 1:
        return vec.astype(complex)
    out = vec[_bit_reversed_indices(n)].astype(complex)
    half = 1
    while half < n:
        twiddle = np.exp(sign * 1j * np.pi * np.arange(half) / half)
        out = out.reshape(-1, 2 * half)
        even = out[:, :half]
        odd = out[:, half:] * twiddle
        out = np.concatenate((even + odd, even - odd), axis=1).reshape(-1)
        half *= 2
    return out


def _dft_direct(vec: np.ndarray, sign: int) -> np.ndarray:
    # O(n^2) evaluation; exponents reduced mod n to keep the phases clean.
    n = vec.size
    k = np.arange(n)
    table = np.exp(sign * 2j * np.pi / n * ((k[:, None] * k[None, :]) % n))
    return table @ vec.astype(complex)


def _transform(vec: np.ndarray, sign: int) -> np.ndarray:
    n = vec.size
    if n & (n - 1) == 0:
        return _fft_pow2(vec, sign)
    return _dft_direct(vec, sign)


def eigenvalues(c: Circulant) -> Spectrum:
    """All n eigenvalues lambda_j = p_C(omega^(j-1)), in slot order."""
    lam = _transform(np.asarray(c.coeffs, dtype=complex), +1)
    return Spectrum(tuple(lam.tolist()))


def eigenvector(ctx: FourierContext, j: int) -> np.ndarray:
    """Column eigenvector x_j = (1, omega^(j-1), omega^(2(j-1)), ...).

    j is 1-based; the first component is exactly 1.
    """
    if not 1 <= j <= ctx.n:
        raise IndexError(f"eigenvalue slot {j} out of range 1..{ctx.n}")
    return ctx.power_array()[((j - 1) * np.arange(ctx.n)) % ctx.n]


def eigenvector_matrix(n: int) -> np.ndarray:
    """Matrix whose j-th column is the eigenvector x_j (a DFT Vandermonde)."""
    ctx = fourier_context(n)
    k = np.arange(n)
    return ctx.power_array()[(k[:, None] * k[None, :]) % n]


def to_diagonal(c: Circulant) -> np.ndarray:
    """The diagonal image diag(lambda_1, ..., lambda_n) of the isomorphism
    onto diagonal matrices; multiplicative and additive on circulants."""
    return np.diag(eigenvalues(c).as_array())


def from_spectrum(spectrum) -> Circulant:
    """Inverse transform: c_i = (1/n) * sum_j conj(omega^((i-1)(j-1))) lambda_j."""
    values = spectrum.values if isinstance(spectrum, Spectrum) else tuple(spectrum)
    lam = np.asarray([_as_scalar(v) for v in values], dtype=complex)
    coeffs = _transform(lam, -1) / lam.size
    return Circulant(tuple(coeffs.tolist()))


def fast_mul(x: Circulant, y: Circulant) -> Circulant:
    """Product through pointwise multiplication of spectra.

    O(n log n) for power-of-two orders; agrees with the convolution
    reference path up to roundoff.
    """
    _check_orders(x, y)
    fx = _transform(np.asarray(x.coeffs, dtype=complex), +1)
    fy = _transform(np.asarray(y.coeffs, dtype=complex), +1)
    coeffs = _transform(fx * fy, -1) / x.n
    return Circulant(tuple(coeffs.tolist()))
