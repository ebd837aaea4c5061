import itertools
import math

import numpy as np
import pytest

from circulants import (
    SingularMatrixError,
    char_poly,
    circ,
    conjugate,
    eigenvalues,
    forms,
    identity,
    inverse,
    is_invertible,
    mul_naive,
    symmetric_tables,
)
from circulants.oracle import faddeev_leverrier
from circulants.spectral import Spectrum
from circulants.verify import closed_forms_n3, closed_forms_n4, random_circulant

SEED = 0x5EED


def brute_elementary(lams):
    """Independent oracle: s_k as explicit sums over k-subsets."""
    n = len(lams)
    out = [1 + 0j]
    for k in range(1, n + 1):
        out.append(sum(math.prod(sub) for sub in itertools.combinations(lams, k)))
    return out


def test_symmetric_tables_allones():
    tables = symmetric_tables(Spectrum((1, 1, 1)))
    assert tables.power_sums == pytest.approx((3, 3, 3), abs=1e-12)
    assert tables.elementary == pytest.approx((1, 3, 3, 1), abs=1e-12)


def test_symmetric_tables_complex_example():
    lams = (6, -1.5 - 0.8660254037844386j, -1.5 + 0.8660254037844386j)
    tables = symmetric_tables(Spectrum(lams))
    expected = brute_elementary(lams)
    assert tables.elementary == pytest.approx(expected, abs=1e-9)
    assert tables.elementary[1] == pytest.approx(3, abs=1e-9)
    assert tables.elementary[2] == pytest.approx(-15, abs=1e-9)
    assert tables.elementary[3] == pytest.approx(18, abs=1e-9)


def test_symmetric_tables_quartic_example():
    lams = (2, 1 + 1j, 0, 1 - 1j)
    tables = symmetric_tables(Spectrum(lams))
    assert tables.elementary == pytest.approx((1, 4, 6, 4, 0), abs=1e-12)
    assert tables.elementary == pytest.approx(brute_elementary(lams), abs=1e-12)


def test_newton_recurrence_against_brute_force():
    rng = np.random.default_rng(SEED)
    for n in range(1, 9):
        lams = tuple(complex(a, b) for a, b in rng.uniform(-1, 1, size=(n, 2)))
        got = symmetric_tables(Spectrum(lams)).elementary
        assert got == pytest.approx(brute_elementary(lams), abs=1e-10)


def test_forms_examples():
    assert forms(circ(1, 2, 3)).q == pytest.approx((3, -15, 18), abs=1e-9)
    assert forms(circ(1, 1, 0, 0)).q == pytest.approx((4, 6, 4, 0), abs=1e-9)
    for n in (1, 2, 5, 8):
        expected = tuple(math.comb(n, i) for i in range(1, n + 1))
        assert forms(identity(n)).q == pytest.approx(expected, abs=1e-9)


def test_trace_and_norm_forms():
    rng = np.random.default_rng(SEED)
    for n in (1, 2, 3, 7, 12):
        c = random_circulant(rng, n)
        q = forms(c)
        assert q.trace_form == pytest.approx(n * c.coeffs[0], abs=1e-9 * (1 + c.norm_inf()))
        det = np.linalg.det(c.to_dense())
        assert q.norm_form == pytest.approx(det, abs=1e-8 * (1 + c.norm_inf()) ** n)


def test_closed_forms_match_production_path():
    rng = np.random.default_rng(SEED)
    for _ in range(500):
        c3 = random_circulant(rng, 3)
        assert forms(c3).q == pytest.approx(closed_forms_n3(c3), abs=1e-10)
        c4 = random_circulant(rng, 4)
        assert forms(c4).q == pytest.approx(closed_forms_n4(c4), abs=1e-10)


def test_char_poly_examples():
    assert char_poly(circ(1, 2, 3)) == pytest.approx((1, -3, -15, -18), abs=1e-9)
    assert char_poly(identity(2)) == pytest.approx((1, -2, 1), abs=1e-12)
    assert char_poly(circ(0, 1)) == pytest.approx((1, 0, -1), abs=1e-12)


def test_char_poly_matches_trace_recurrence_oracle():
    rng = np.random.default_rng(SEED)
    for n in range(1, 13):
        c = random_circulant(rng, n)
        mine = np.asarray(char_poly(c))
        oracle = np.asarray(faddeev_leverrier(c.to_dense()))
        assert np.max(np.abs(mine - oracle)) <= 1e-8 * (1.0 + c.norm_inf()) ** n


def test_conjugate_examples():
    assert conjugate(circ(1, 2, 3)).coeffs == pytest.approx((-5, 7, 1), abs=1e-9)
    assert conjugate(identity(3)).coeffs == pytest.approx((1, 0, 0), abs=1e-9)


def test_conjugate_times_self_is_norm_form():
    # x * conj(x) = q_n(x) * 1; for the singular circ(1,1,0,0) that is zero.
    c = circ(1, 1, 0, 0)
    product = mul_naive(c, conjugate(c))
    assert max(abs(z) for z in product.coeffs) <= 1e-9
    rng = np.random.default_rng(SEED)
    for n in (1, 2, 3, 6, 9):
        x = random_circulant(rng, n)
        product = mul_naive(x, conjugate(x))
        qn = forms(x).norm_form
        expected = (qn,) + (0j,) * (n - 1)
        scale = (1.0 + x.norm_inf()) ** n
        assert product.coeffs == pytest.approx(expected, abs=1e-9 * scale)


def test_conjugate_against_dense_adjugate_oracle():
    rng = np.random.default_rng(SEED)
    for n in (2, 3, 4, 6):
        x = random_circulant(rng, n)
        dense = x.to_dense()
        adjugate = np.linalg.inv(dense) * np.linalg.det(dense)
        got = conjugate(x).to_dense()
        assert np.max(np.abs(got - adjugate)) <= 1e-8 * (1.0 + x.norm_inf()) ** n


def test_inverse_examples():
    inv = inverse(circ(1, 2, 3))
    assert inv.coeffs == pytest.approx((-5 / 18, 7 / 18, 1 / 18), abs=1e-12)
    assert inverse(identity(4)).coeffs == pytest.approx((1, 0, 0, 0), abs=1e-12)
    with pytest.raises(SingularMatrixError) as err:
        inverse(circ(1, 1, 0, 0))
    assert err.value.witness == 3


def test_inverse_times_self_is_identity():
    rng = np.random.default_rng(SEED)
    for n in (1, 2, 3, 5, 8):
        x = random_circulant(rng, n) + 3 * identity(n)
        inv = inverse(x)
        product = mul_naive(x, inv)
        scale = 1.0 + x.norm_inf() * inv.norm_inf()
        assert product.coeffs == pytest.approx(identity(n).coeffs, abs=1e-9 * scale)


def test_is_invertible_witnesses():
    verdict = is_invertible(circ(1, 1, 1))
    assert not verdict.invertible and verdict.witness == 2
    assert is_invertible(circ(1, 2, 3)).invertible
    verdict = is_invertible(circ(1, 1, 0, 0))
    assert not verdict.invertible and verdict.witness == 3


def test_witness_slot_is_a_vanishing_root_of_unity():
    verdict = is_invertible(circ(1, 1, 0, 0))
    lam = eigenvalues(circ(1, 1, 0, 0)).values
    assert abs(lam[verdict.witness - 1]) <= 1e-12


def test_cayley_hamilton_at_element_level():
    rng = np.random.default_rng(SEED)
    for n in range(1, 11):
        for _ in range(20):
            x = random_circulant(rng, n)
            monic = char_poly(x)
            acc = monic[0] * identity(n)
            for coeff in monic[1:]:
                acc = mul_naive(acc, x) + coeff * identity(n)
            bound = 1e-8 * (1.0 + x.norm_inf()) ** n
            assert max(abs(z) for z in acc.coeffs) <= bound


def test_trace_of_conjugate_is_second_highest_form():
    rng = np.random.default_rng(SEED)
    for n in range(2, 11):
        for _ in range(20):
            x = random_circulant(rng, n)
            lhs = forms(conjugate(x)).q[0]
            rhs = forms(x).q[n - 2]
            assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(lhs) + abs(rhs))


def test_q2_sum_identity():
    rng = np.random.default_rng(SEED)
    for n in range(2, 11):
        for _ in range(20):
            x, y = random_circulant(rng, n), random_circulant(rng, n)
            qx, qy = forms(x).q, forms(y).q
            lhs = forms(x + y).q[1]
            rhs = qx[1] + qy[1] + qx[0] * qy[0] - forms(mul_naive(x, y)).q[0]
            assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(lhs) + abs(rhs))


def test_real_input_gives_real_forms():
    rng = np.random.default_rng(SEED)
    for n in (2, 3, 4, 7):
        c = circ(*(float(v) for v in rng.uniform(-1, 1, size=n)))
        assert all(abs(q.imag) <= 1e-9 for q in forms(c).q)
