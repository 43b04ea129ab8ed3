import random
from fractions import Fraction as F

import pytest

from nahm_forge.errors import Divergent
from nahm_forge.series import QSeries, eq_to_order
from nahm_forge.products import (
    J, Jm, PochFactor, ProductSpec, eta_quotient, jacobi_triple, neg_base_pair,
    pf, poch, poch_param, product,
)

from _oracles import (
    partition_count, partitions_distinct_from_parts, pentagonal_coeffs,
    poch_naive, ser_mul, triple_product_coeffs,
)


def test_poch_distinct_odd_parts():
    # (-q; q^2)_inf counts partitions into distinct odd parts
    s = poch(pf(-1, 1, 2), 9)
    odd = tuple(range(1, 9, 2))
    expected = {n: partitions_distinct_from_parts(n, odd) for n in range(9)}
    assert {k: v for k, v in expected.items() if v} == s.coeffs
    assert s.coeffs == {0: 1, 1: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1, 8: 2}


def test_poch_finite_literal():
    s = poch(pf(1, 1, 1, 2), 10)
    assert s.coeffs == {0: 1, 1: -1, 2: -1, 3: 1}


def test_poch_minus_one_doubles():
    lhs = poch(pf(-1, 0, 1), 30)
    rhs = poch(pf(-1, 1, 1), 30).scale(2)
    assert lhs.coeff(0) == 2
    assert eq_to_order(lhs, rhs, 30) is None


def test_poch_divergent_cases():
    with pytest.raises(Divergent):
        poch(pf(1, 0, 1), 10)
    with pytest.raises(Divergent):
        poch(pf(1, -1, 1), 10)


def test_negative_exponent_finite_poch():
    # (q^-1; q)_2 = (1 - q^-1)(1 - 1) = 0
    assert poch(pf(1, -1, 1, 2), 5).is_zero()
    # (-q^-1; q^2)_2 = (1 + q^-1)(1 + q) = q^-1 + 2 + q
    s = poch(pf(-1, -1, 2, 2), 5)
    assert s.coeffs == {-1: 1, 0: 2, 1: 1}


def test_J_against_bilateral_oracle():
    s = J(1, 5, 8)
    expect = triple_product_coeffs(F(1), 1, F(5), F(8))
    assert {F(k): F(v) for k, v in s.coeffs.items()} == expect
    assert s.coeffs == {0: 1, 1: -1, 4: -1, 7: 1}


def test_Jm_pentagonal():
    s = Jm(1, 40)
    assert s.coeffs == pentagonal_coeffs(40)


def test_J_2_4_by_direct_multiplication():
    s = J(2, 4, 12)
    naive = poch_naive(1, F(2), F(4), None, F(12))
    naive = ser_mul(naive, poch_naive(1, F(2), F(4), None, F(12)), F(12))
    naive = ser_mul(naive, poch_naive(1, F(4), F(4), None, F(12)), F(12))
    assert {F(k): F(v) for k, v in s.coeffs.items()} == naive
    assert s.coeff(0) == 1 and s.coeff(2) == -2 and s.coeff(4) == 0 and s.coeff(8) == 2


def test_jacobi_triple_matches_poch_specialization():
    lhs = jacobi_triple(2, 1, 5, 40)
    rhs = product((pf(1, 5, 5), pf(1, 2, 5), pf(1, 3, 5)), 40)
    assert eq_to_order(lhs, rhs, 40) is None


def test_jacobi_triple_vanishing():
    assert jacobi_triple(1, 1, 1, 30).is_zero()


def test_jacobi_triple_matches_J_12_28():
    lhs = jacobi_triple(12, 1, 28, 80)
    rhs = J(12, 28, 80)
    assert eq_to_order(lhs, rhs, 80) is None


def test_jacobi_triple_random_agreement():
    rng = random.Random(20240811)
    for _ in range(20):
        den = rng.choice([1, 1, 2])
        m = F(rng.randint(1, 12), den)
        zexp = F(rng.randint(1, max(1, int(m * den) - 1)), den)
        if not 0 < zexp < m:
            zexp = m / 2
        zsign = rng.choice([1, -1])
        lhs = jacobi_triple(zexp, zsign, m, 60)
        rhs = product((pf(1, m, m), pf(zsign, zexp, m), pf(zsign, m - zexp, m)), 60)
        assert eq_to_order(lhs, rhs, 60) is None, (zexp, zsign, m)


def test_J_symmetry():
    for a, m in [(1, 5), (2, 7), (3, 8)]:
        assert eq_to_order(J(a, m, 60), J(m - a, m, 60), 60) is None


def test_poch_power_inverse_cancels():
    f = pf(-1, 2, 3)
    s = product((f, pf(-1, 2, 3, None, -1)), 50)
    assert eq_to_order(s, QSeries.one(50), 50) is None


def test_euler_complement():
    # (-q; q)_inf (q; q^2)_inf = 1
    s = product((pf(-1, 1, 1), pf(1, 1, 2)), 80)
    assert eq_to_order(s, QSeries.one(80), 80) is None


def test_eta_quotient_partition_gf():
    s = eta_quotient({1: -1}, 12)
    assert [s.coeff(n) for n in range(5)] == [1, 1, 2, 3, 5]
    assert all(s.coeff(n) == partition_count(n) for n in range(12))


def test_eta_quotient_empty():
    s = eta_quotient({}, 10)
    assert s.coeffs == {0: 1}


def test_eta_quotient_by_factor_multiplication():
    s = eta_quotient({3: 2, 1: -1, 6: -1}, 40)
    step = poch_naive(1, F(3), F(3), None, F(40))
    naive = ser_mul(step, step, F(40))
    from _oracles import ser_inv
    naive = ser_mul(naive, ser_inv(poch_naive(1, F(1), F(1), None, F(40)), F(40)), F(40))
    naive = ser_mul(naive, ser_inv(poch_naive(1, F(6), F(6), None, F(40)), F(40)), F(40))
    assert {F(k): F(v) for k, v in s.coeffs.items()} == naive


def test_neg_base_pair_splits_even_odd_rungs():
    # (-q; -q^7)_inf == (-q; q^14)_inf (q^8; q^14)_inf
    a, b = neg_base_pair(-1, 1, 7)
    assert (a.sign, a.a, a.m) == (-1, 1, 14)
    assert (b.sign, b.a, b.m) == (1, 8, 14)
    direct = {F(0): F(1)}
    base = -1  # sign flag of -q^7: rung k multiplies by (1 + (-1)^k q^(1+7k))
    for k in range(6):
        sgn = -1 if k % 2 == 0 else 1
        direct = ser_mul(direct, {F(0): F(1), F(1 + 7 * k): F(-sgn)}, F(40))
    got = product((a, b), 40)
    assert {F(k): F(v) for k, v in got.coeffs.items()} == direct


def test_product_spec_roundtrip_json():
    spec = ProductSpec(F(-1, 2), F(2), (pf(-1, 1, 2), pf(1, 3, 4, 5, -2)))
    again = ProductSpec.from_json(spec.to_json())
    assert again == spec
    assert eq_to_order(spec.evaluate(20), again.evaluate(20), 20) is None


def test_product_spec_empty_factors():
    spec = ProductSpec(F(2), F(3), ())
    s = spec.evaluate(10)
    assert s.coeffs == {2: 3}


def test_poch_param_matches_specialization():
    p = poch_param(-1, 1, 0, 0, 1, 20, 20, 0)   # (-u; q)_inf
    for a in (1, 2, 3):
        got = p.substitute(a, 0)
        want = poch(pf(-1, a, 1), got.order)
        n = min(got.order, want.order)
        assert eq_to_order(got.truncate(n), want.truncate(n), n) is None
