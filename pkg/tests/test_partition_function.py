"""Partition function, mixed Hodge extraction, twisted series, genericity."""

from fractions import Fraction

import pytest

from charhilb.partitions import Partition, enumerate_partitions
from charhilb.qt import QTLaurent, QTScalar, one_minus_q_one_minus_t
from charhilb.partition_function import (
    MixedHodgeResult,
    MultiplicityData,
    euler_chi_hilb,
    fq_point_count,
    hook_product,
    is_generic,
    mixed_hodge,
    omega,
    omega_twisted,
    plog_twisted,
    twisted_coefficient,
)

ONE = QTScalar.one()
Q = QTScalar.q()
T = QTScalar.t()


def test_omega_rank0_and_rank1():
    s = omega(0, 1, 1)
    assert s.coefficient(0).coefficient((Partition(),)) == ONE
    # single cell: arm = leg = 0, hook = 1/((1-t)(q-1))
    c = s.coefficient(1).coefficient((Partition((1,)),))
    assert c == ONE / ((ONE - T) * (Q - ONE))


def test_omega_rank1_genus1():
    s = omega(1, 1, 1)
    c = s.coefficient(1).coefficient((Partition((1,)),))
    half_diff = QTScalar.monomial(1, 1, 0) - QTScalar.monomial(1, 0, 1)
    assert c == half_diff ** 2 / ((ONE - T) * (Q - ONE))


def test_mixed_hodge_single_puncture():
    r = mixed_hodge(0, 1, [Partition((1,))])
    assert r.mh == ONE and r.is_polynomial


def test_mixed_hodge_genus1_half_exponents():
    r = mixed_hodge(1, 1, [Partition((1,))])
    half_diff = QTScalar.monomial(1, 1, 0) - QTScalar.monomial(1, 0, 1)
    assert r.mh == half_diff ** 2
    assert r.is_polynomial  # exponents in (1/2) Z >= 0


def test_fq_point_count_examples():
    r = MixedHodgeResult((), Q + T + 4 * ONE, True)
    assert fq_point_count(r, 2) == (Q * Q + 4 * Q + ONE).num
    r0 = MixedHodgeResult((), ONE, True)
    assert fq_point_count(r0, 0) == QTLaurent.one()
    half_diff = QTScalar.monomial(1, 1, 0) - QTScalar.monomial(1, 0, 1)
    r1 = MixedHodgeResult((), half_diff ** 2, True)
    assert fq_point_count(r1, 2) == (Q * Q - 2 * Q + ONE).num


def test_fq_point_count_rejects_nonpolynomial():
    r = MixedHodgeResult((), ONE / (ONE - Q), False)
    with pytest.raises(ValueError):
        fq_point_count(r, 2)


def test_is_generic_markov_case():
    # eigenvalues {l, 1/l} with l = 2, 3, 5, 7: all 16 products differ from 1
    mu = tuple(Partition((1, 1)) for _ in range(4))
    evs = tuple((Fraction(l), Fraction(1, l)) for l in (2, 3, 5, 7))
    assert is_generic(MultiplicityData(mu, evs))


def test_is_generic_failure():
    mu = (Partition((1, 1)), Partition((1, 1)))
    evs = ((Fraction(2), Fraction(1, 2)), (Fraction(1, 2), Fraction(2)))
    assert not is_generic(MultiplicityData(mu, evs))


def test_is_generic_rank_one():
    mu = (Partition((1,)), Partition((1,)))
    assert is_generic(MultiplicityData(mu, ((Fraction(3),), (Fraction(1, 3),))))
    assert not is_generic(MultiplicityData(mu, ((Fraction(3),), (Fraction(2),))))


def test_is_generic_requires_eigenvalues():
    with pytest.raises(ValueError):
        is_generic(MultiplicityData((Partition((1,)),)))


def paper_twisted_z2(k):
    """(q^{k+1}(1-t^2) - t^{k+1}(1-q^2)) / ((q-t)(1-q)(1-q^2)(1-t)(1-t^2))"""
    num = Q ** (k + 1) * (ONE - T * T) - T ** (k + 1) * (ONE - Q * Q)
    den = (Q - T) * (ONE - Q) * (ONE - Q * Q) * (ONE - T) * (ONE - T * T)
    return num / den


def test_omega_twisted_first_terms():
    for k in range(5):
        s = omega_twisted(k, 2)
        assert twisted_coefficient(s, 0) == ONE
        z1 = ONE * (-1) ** k / ((ONE - T) * (ONE - Q))
        assert twisted_coefficient(s, 1) == z1, k
        assert twisted_coefficient(s, 2) == paper_twisted_z2(k), k


def plog_z2_target(k):
    """-1/((1-q)(1-t)) * sum q^i t^j over i+j <= k-2, i+j = k mod 2."""
    total = QTScalar.zero()
    for i in range(0, max(k - 1, 0)):
        for j in range(0, k - 1 - i):
            if (i + j) % 2 == k % 2:
                total = total + Q ** i * T ** j
    return -total / ((ONE - Q) * (ONE - T))


def test_plog_twisted_coefficients():
    for k in range(6):
        s = plog_twisted(k, 2)
        z1 = ONE * (-1) ** k / ((ONE - Q) * (ONE - T))
        assert twisted_coefficient(s, 1) == z1, k
        assert twisted_coefficient(s, 2) == plog_z2_target(k), k


def test_plog_twisted_specific_values():
    # k = 2: only (i,j) = (0,0) contributes
    assert twisted_coefficient(plog_twisted(2, 2), 2) == \
        -ONE / ((ONE - Q) * (ONE - T))
    # k = 1: empty sum
    assert twisted_coefficient(plog_twisted(1, 2), 2).is_zero()


def test_euler_chi_hilb():
    for k in range(4):
        assert euler_chi_hilb(1, k) == ONE / ((ONE - Q) * (ONE - T))
    assert euler_chi_hilb(0, 2) == ONE
    # n = 2, k = 0: hand sum over the two partitions of 2, with the
    # localization weight q^{n(lam')} t^{n(lam)} per fixed point
    expected = QTScalar.zero()
    for lam in enumerate_partitions(2):
        den = ONE
        for i, j in lam.cells():
            a, l = lam.arm(i, j), lam.leg(i, j)
            den = den * (Q ** a - T ** (l + 1)) * (Q ** (a + 1) - T ** l)
        weight = Q ** lam.conjugate().n_stat() * T ** lam.n_stat()
        expected = expected + weight / den
    assert euler_chi_hilb(2, 0) == expected


def test_hook_product_matches_structure():
    lam = Partition((2, 1))
    hp = hook_product(lam, 0)
    den = ONE
    for i, j in lam.cells():
        a, l = lam.arm(i, j), lam.leg(i, j)
        den = den * (Q ** a - T ** (l + 1)) * (Q ** (a + 1) - T ** l)
    assert hp.value == ONE / den


def test_mixed_hodge_rank_guard():
    with pytest.raises(ValueError):
        mixed_hodge(0, 1, [Partition((2,))], truncation=1)
