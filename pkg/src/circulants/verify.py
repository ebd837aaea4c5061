"""Seeded spot checks of every module's invariants, for `verify-all`.

Each suite draws reproducible random inputs and measures the worst
deviation of a handful of identities; the pytest suite runs the same
checks at full strength.  Also home to the order-3 and order-4
closed-form expressions for the forms, kept solely as independent
oracles against the Newton-identity production path.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import hopf, lattice, oracle, spectral, twisted
from .core import Circulant, fundamental, identity, mul_naive
from .forms import char_poly, conjugate
from .forms import forms as forms_of
from .oracle import OracleReport

DEFAULT_SEED = 0x5EED


def closed_forms_n3(c: Circulant) -> tuple[complex, complex, complex]:
    """Hard-coded (q_1, q_2, q_3) for order 3."""
    c1, c2, c3 = c.coeffs
    return (
        3 * c1,
        3 * c1**2 - 3 * c2 * c3,
        c1**3 + c2**3 + c3**3 - 3 * c1 * c2 * c3,
    )


def closed_forms_n4(c: Circulant) -> tuple[complex, complex, complex, complex]:
    """Hard-coded (q_1, ..., q_4) for order 4."""
    c1, c2, c3, c4 = c.coeffs
    return (
        4 * c1,
        6 * c1**2 - 4 * c2 * c4 - 2 * c3**2,
        4 * c1**3 - 8 * c1 * c2 * c4 - 4 * c1 * c3**2 + 4 * c2**2 * c3 + 4 * c3 * c4**2,
        c1**4
        - c2**4
        + c3**4
        - c4**4
        - 2 * c1**2 * c3**2
        - 4 * c1**2 * c2 * c4
        + 4 * c1 * c2**2 * c3
        + 4 * c1 * c3 * c4**2
        + 2 * c2**2 * c4**2
        - 4 * c2 * c3**2 * c4,
    )


def random_circulant(rng: np.random.Generator, n: int) -> Circulant:
    parts = rng.uniform(-1.0, 1.0, size=(n, 2))
    return Circulant(tuple(complex(re, im) for re, im in parts))


def random_real_circulant(rng: np.random.Generator, n: int) -> Circulant:
    return Circulant(tuple(complex(x, 0.0) for x in rng.uniform(-1.0, 1.0, size=n)))


def _report(name: str, deviation: float, tol: float) -> OracleReport:
    return OracleReport(name=name, passed=bool(deviation <= tol), max_deviation=float(deviation))


def _max_coeff_diff(x: Circulant, y: Circulant) -> float:
    return max(abs(a - b) for a, b in zip(x.coeffs, y.coeffs))


def core_suite(rng: np.random.Generator) -> list[OracleReport]:
    worst_dense = worst_comm = worst_pow = worst_row = worst_tr = 0.0
    for n in (1, 2, 3, 4, 5, 8, 12, 16, 32):
        for _ in range(5):
            x, y = random_circulant(rng, n), random_circulant(rng, n)
            product = mul_naive(x, y)
            worst_dense = max(
                worst_dense,
                float(np.max(np.abs(product.to_dense() - oracle.dense_mul(x.to_dense(), y.to_dense())))),
            )
            worst_comm = max(worst_comm, _max_coeff_diff(product, mul_naive(y, x)))
            worst_tr = max(
                worst_tr,
                float(np.max(np.abs(x.transpose().to_dense() - x.to_dense().T))),
            )
            worst_row = max(worst_row, float(np.max(np.abs(x.to_dense()[0] - np.asarray(x.coeffs)))))
            p = fundamental(n)
            acc = x.coeffs[0] * identity(n)
            power = identity(n)
            for k in range(1, n):
                power = mul_naive(power, p)
                acc = acc + x.coeffs[k] * power
            worst_pow = max(worst_pow, _max_coeff_diff(acc, x))
    return [
        _report("core.naive-product-matches-dense-product", worst_dense, 1e-12),
        _report("core.convolution-commutes", worst_comm, 1e-13),
        _report("core.transpose-matches-dense-transpose", worst_tr, 0.0),
        _report("core.shift-powers-rebuild-circulant", worst_pow, 0.0),
        _report("core.dense-first-row-is-verbatim", worst_row, 0.0),
    ]


def spectral_suite(rng: np.random.Generator) -> list[OracleReport]:
    worst_round = worst_lin = worst_resid = worst_fast = 0.0
    for n in (1, 2, 3, 4, 5, 8, 12, 16, 31, 32, 64):
        for _ in range(5):
            x, y = random_circulant(rng, n), random_circulant(rng, n)
            worst_round = max(
                worst_round, _max_coeff_diff(spectral.from_spectrum(spectral.eigenvalues(x)), x)
            )
            lx, ly = spectral.eigenvalues(x).as_array(), spectral.eigenvalues(y).as_array()
            lsum = spectral.eigenvalues(x + y).as_array()
            worst_lin = max(worst_lin, float(np.max(np.abs(lsum - lx - ly))))
            dense = x.to_dense()
            v = spectral.eigenvector_matrix(n)
            resid = np.max(np.abs(dense @ v - v * lx[None, :])) / (1.0 + x.norm_inf())
            worst_resid = max(worst_resid, float(resid))
            scale = 1.0 + x.norm_inf() * y.norm_inf()
            worst_fast = max(
                worst_fast, _max_coeff_diff(spectral.fast_mul(x, y), mul_naive(x, y)) / scale
            )
    return [
        _report("spectral.spectrum-roundtrip", worst_round, 1e-9),
        _report("spectral.transform-linearity", worst_lin, 1e-12),
        _report("spectral.eigen-residuals", worst_resid, 1e-9),
        _report("spectral.fast-product-matches-naive", worst_fast, 1e-9),
    ]


def forms_suite(rng: np.random.Generator) -> list[OracleReport]:
    worst_ch = worst_conj = worst_q2 = worst_closed = worst_fl = 0.0
    for n in range(2, 11):
        for _ in range(5):
            x, y = random_circulant(rng, n), random_circulant(rng, n)
            monic = char_poly(x)
            acc = monic[0] * identity(n)
            for coeff in monic[1:]:
                acc = mul_naive(acc, x) + coeff * identity(n)
            worst_ch = max(
                worst_ch,
                max(abs(z) for z in acc.coeffs) / (1.0 + x.norm_inf()) ** n,
            )
            qx = forms_of(x).q
            scale = 1.0 + abs(qx[n - 2])
            worst_conj = max(
                worst_conj, abs(forms_of(conjugate(x)).q[0] - qx[n - 2]) / scale
            )
            qy = forms_of(y).q
            qsum = forms_of(x + y).q
            qprod = forms_of(mul_naive(x, y)).q
            lhs = qsum[1]
            rhs = qx[1] + qy[1] + qx[0] * qy[0] - qprod[0]
            worst_q2 = max(worst_q2, abs(lhs - rhs) / (1.0 + abs(lhs) + abs(rhs)))
            flo = oracle.faddeev_leverrier(x.to_dense())
            worst_fl = max(
                worst_fl,
                max(abs(a - b) for a, b in zip(monic, flo)) / (1.0 + x.norm_inf()) ** n,
            )
    for _ in range(20):
        c3, c4 = random_circulant(rng, 3), random_circulant(rng, 4)
        worst_closed = max(
            worst_closed,
            max(abs(a - b) for a, b in zip(forms_of(c3).q, closed_forms_n3(c3))),
            max(abs(a - b) for a, b in zip(forms_of(c4).q, closed_forms_n4(c4))),
        )
    return [
        _report("forms.element-satisfies-char-poly", worst_ch, 1e-8),
        _report("forms.trace-of-conjugate-is-q(n-1)", worst_conj, 1e-9),
        _report("forms.q2-sum-identity", worst_q2, 1e-9),
        _report("forms.closed-forms-n3-n4", worst_closed, 1e-10),
        _report("forms.char-poly-matches-trace-recurrence", worst_fl, 1e-8),
    ]


def hopf_suite(rng: np.random.Generator) -> list[OracleReport]:
    worst_axiom = worst_map = worst_spec = worst_fact = worst_invol = worst_coassoc = 0.0
    for n in (1, 2, 3, 4, 8, 16):
        for _ in range(5):
            x = random_circulant(rng, n)
            worst_axiom = max(
                worst_axiom,
                hopf.verify_counit_axiom(x).residual,
                hopf.verify_antipode_axiom(x).residual,
                hopf.integral_check(x).residual,
            )
            worst_invol = max(worst_invol, _max_coeff_diff(hopf.antipode(hopf.antipode(x)), x))
            a = rng.uniform(-1.0, 1.0, size=(n, n)) + 1j * rng.uniform(-1.0, 1.0, size=(n, n))
            worst_fact = max(
                worst_fact,
                float(np.max(np.abs(hopf.reconstruct_factorization(hopf.factorize_dense(a)) - a))),
            )
    for n in (1, 2, 3, 4, 5, 6):
        for _ in range(3):
            x, y = random_circulant(rng, n), random_circulant(rng, n)
            left = hopf.block_mul(hopf.comultiplication(x), hopf.comultiplication(y)).expand()
            right = hopf.comultiplication(mul_naive(x, y)).expand()
            worst_map = max(worst_map, float(np.max(np.abs(left - right))))
            lt, rt = hopf.coassociativity_tensors(x)
            worst_coassoc = max(worst_coassoc, float(np.max(np.abs(lt - rt))))
            expanded = np.linalg.eigvals(hopf.comultiplication(x).expand())
            matched = oracle.greedy_multiset_match(
                hopf.delta_spectrum(x), expanded, 1e-9 * (1.0 + x.norm_inf())
            )
            worst_spec = max(worst_spec, np.inf if matched is None else matched)
    return [
        _report("hopf.axiom-residuals", worst_axiom, 1e-10),
        _report("hopf.coproduct-is-algebra-map", worst_map, 1e-9),
        _report("hopf.coassociativity-exact", worst_coassoc, 0.0),
        _report("hopf.delta-spectrum-multiplicity-n", worst_spec, 1e-7),
        _report("hopf.factorization-roundtrip", worst_fact, 0.0),
        _report("hopf.antipode-involution", worst_invol, 0.0),
    ]


def twisted_suite(rng: np.random.Generator) -> list[OracleReport]:
    worst_cocycle = worst_transport = worst_eigen = worst_skew = worst_sigma = 0.0
    for n in (1, 2, 3, 4, 5, 8):
        for _ in range(4):
            mags = rng.uniform(0.5, 2.0, size=n - 1) if n > 1 else np.empty(0)
            phases = rng.uniform(0.0, 2 * np.pi, size=n - 1) if n > 1 else np.empty(0)
            weights = twisted.MuWeights.from_tail(tuple(mags * np.exp(1j * phases)))
            report = twisted.verify_cocycle(twisted.cocycle_from_mu(weights))
            worst_cocycle = max(worst_cocycle, report.residual)
            x = twisted.MuCirculant(random_circulant(rng, n).coeffs, weights)
            y = twisted.MuCirculant(random_circulant(rng, n).coeffs, weights)
            dense_prod = twisted.mu_to_dense(x) @ twisted.mu_to_dense(y)
            structural = twisted.mu_to_dense(twisted.mu_mul(x, y))
            scale = 1.0 + float(np.max(np.abs(dense_prod)))
            worst_transport = max(
                worst_transport, float(np.max(np.abs(structural - dense_prod))) / scale
            )
            eig = twisted.mu_eigen(x)
            dense = twisted.mu_to_dense(x)
            resid = np.max(
                np.abs(dense @ eig.vectors - eig.vectors * eig.spectrum.as_array()[None, :])
            )
            worst_eigen = max(worst_eigen, float(resid) / (1.0 + float(np.max(np.abs(dense)))))
    for n in (1, 2, 3, 5, 8, 16, 32):
        c = random_real_circulant(rng, n)
        skew_dense = twisted.mu_to_dense(twisted.skew_circ(c.coeffs))
        flipped = c.to_dense()
        flipped[np.tril_indices(n, k=-1)] *= -1.0
        worst_skew = max(worst_skew, float(np.max(np.abs(skew_dense - flipped))))
    for n in range(1, 65):
        sigma = twisted.skew_root(n)
        omega = spectral.fourier_context(n).omega
        worst_sigma = max(worst_sigma, abs(sigma**2 - omega), abs(sigma**n + 1.0))
    return [
        _report("twisted.coboundary-satisfies-cocycle-identity", worst_cocycle, 1e-10),
        _report("twisted.product-transport-matches-dense", worst_transport, 1e-9),
        _report("twisted.eigen-residuals", worst_eigen, 1e-9),
        _report("twisted.skew-is-sign-flipped-circulant", worst_skew, 1e-12),
        _report("twisted.skew-root-squares-to-omega", worst_sigma, 1e-12),
    ]


def lattice_suite(rng: np.random.Generator) -> list[OracleReport]:
    reports: list[OracleReport] = []
    basis = lattice.lattice_new(
        [
            [Fraction(0), Fraction(-1), Fraction(1)],
            [Fraction(-1, 3), Fraction(1, 3), Fraction(1, 3)],
            [Fraction(1, 3), Fraction(2, 3), Fraction(-1, 3)],
        ]
    )
    integral, inverse = lattice.basis_inverse_integral(basis)
    expected_inverse = ((1, -1, 2), (0, 1, 1), (1, 1, 1))
    inverse_ok = integral and all(
        inverse[i][j] == expected_inverse[i][j] for i in range(3) for j in range(3)
    )
    reports.append(_report("lattice.reference-basis-inverse", 0.0 if inverse_ok else 1.0, 0.0))
    solution = lattice.lattice_decompose(basis, lattice.rational_circ(1, 0, 0))
    solve_ok = solution.member and solution.coefficients == (1, -1, 2)
    reports.append(_report("lattice.reference-decomposition", 0.0 if solve_ok else 1.0, 0.0))
    members_ok = True
    for _ in range(20):
        target = lattice.rational_circ(*(int(v) for v in rng.integers(-9, 10, size=3)))
        sol = lattice.lattice_decompose(basis, target)
        members_ok = members_ok and sol.member
    reports.append(_report("lattice.integral-targets-decompose", 0.0 if members_ok else 1.0, 0.0))

    a = lattice.rational_circ(2, 1, 1)
    b = lattice.rational_circ(1, 1, 1)
    spec_a = lattice.integer_spectrum(a)
    spec_b = lattice.integer_spectrum(b)
    spec_sum = lattice.integer_spectrum(a + b)
    spec_prod = lattice.integer_spectrum(a * b)
    closure_ok = (
        spec_a is not None
        and spec_a.values == (4, 1, 1)
        and spec_b is not None
        and spec_b.values == (3, 0, 0)
        and spec_sum is not None
        and spec_prod is not None
        and lattice.brandt_check([a, b]).holds
    )
    reports.append(_report("lattice.integer-spectra-and-brandt", 0.0 if closure_ok else 1.0, 0.0))
    rec = lattice.reconstruct_from_spectrum(spec_a)
    dev = _max_coeff_diff(rec.circulant, a.to_float()) if rec.real else np.inf
    reports.append(_report("lattice.spectrum-reconstruction", float(dev), 1e-9))
    return reports


def oracle_suite(rng: np.random.Generator) -> list[OracleReport]:
    worst_fl = 0.0
    inverse_ok = True
    for n in range(1, 11):
        ints = rng.integers(-5, 6, size=n)
        exact = lattice.rational_circ(*(int(v) for v in ints))
        exact_poly = oracle.faddeev_leverrier_exact(exact.to_exact_dense())
        float_poly = oracle.faddeev_leverrier(exact.to_float().to_dense())
        scale = 1.0 + max(abs(float(v)) for v in exact_poly)
        worst_fl = max(
            worst_fl,
            max(abs(float(a) - b) for a, b in zip(exact_poly, float_poly)) / scale,
        )
        grid = [[Fraction(int(v)) for v in row] for row in rng.integers(-5, 6, size=(n, n))]
        if oracle.exact_det(grid) == 0:
            continue
        inv = oracle.exact_inverse(grid)
        product = [
            [sum(inv[i][k] * grid[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        inverse_ok = inverse_ok and all(
            product[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)
        )
    return [
        _report("oracle.exact-and-float-char-polys-agree", worst_fl, 1e-8),
        _report("oracle.exact-inverse-times-matrix-is-identity", 0.0 if inverse_ok else 1.0, 0.0),
    ]


SUITES = (
    ("core", core_suite),
    ("spectral", spectral_suite),
    ("forms", forms_suite),
    ("hopf", hopf_suite),
    ("twisted", twisted_suite),
    ("lattice", lattice_suite),
    ("oracle", oracle_suite),
)


def run_all(seed: int = DEFAULT_SEED) -> list[OracleReport]:
    rng = np.random.default_rng(seed)
    reports: list[OracleReport] = []
    for _, suite in SUITES:
        reports.extend(suite(rng))
    return reports
