"""Symmetric functions, Macdonald polynomials, plethystic exp/log."""

import random
from fractions import Fraction

import pytest

from charhilb.partitions import Partition, enumerate_partitions
from charhilb.qt import QTScalar, qt_substitute
from charhilb.symfunc import (
    SymFunc,
    SymSeries,
    adams,
    coefficient_of_monomial,
    modified_macdonald,
    modified_macdonald_inner_product,
    p_exp,
    p_log,
    sym_mul,
)

ONE = QTScalar.one()
Q = QTScalar.q()
T = QTScalar.t()


def mono(lam, c=None):
    return SymFunc(1, {(Partition(lam),): c or ONE})


def random_symfunc(rng, alphabets=1, maxsize=2):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        key = tuple(rng.choice(enumerate_partitions(rng.randint(0, maxsize)))
                    for _ in range(alphabets))
        c = QTScalar.from_rational(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
        if not c.is_zero():
            terms[key] = c
    return SymFunc(alphabets, terms)


def test_sym_mul_examples():
    m1 = mono((1,))
    assert m1 * m1 == SymFunc(1, {(Partition((2,)),): ONE,
                                  (Partition((1, 1)),): 2 * ONE})
    f = random_symfunc(random.Random(3))
    assert f * SymFunc.one(1) == f
    # multinomial oracle: p1^3 = 6 m111 + 3 m21 + m3 (p1 = m1)
    cube = m1 * m1 * m1
    assert cube == SymFunc(1, {(Partition((1, 1, 1)),): 6 * ONE,
                               (Partition((2, 1)),): 3 * ONE,
                               (Partition((3,)),): ONE})


def test_sym_mul_alphabet_mismatch():
    with pytest.raises(ValueError):
        sym_mul(SymFunc.one(1), SymFunc.one(2))


def test_modified_macdonald_small():
    h1 = modified_macdonald(Partition((1,)))
    assert h1 == mono((1,))
    h2 = modified_macdonald(Partition((2,)))
    assert h2 == SymFunc(1, {(Partition((2,)),): ONE,
                             (Partition((1, 1)),): ONE + Q})
    h11 = modified_macdonald(Partition((1, 1)))
    assert h11 == SymFunc(1, {(Partition((2,)),): ONE,
                              (Partition((1, 1)),): ONE + T})


def test_modified_macdonald_vs_inner_product_oracle():
    for n in range(1, 6):
        for mu in enumerate_partitions(n):
            combinatorial = modified_macdonald(mu).terms
            oracle = modified_macdonald_inner_product(mu)
            assert set(combinatorial) == {(k,) for k in oracle}
            for lam, c in oracle.items():
                assert combinatorial[(lam,)] == c, (mu, lam)


def test_modified_macdonald_q_t_one_specialization():
    # at q = t = 1 every filling has weight 1, so H_mu = (m_1)^{|mu|}
    for n in range(1, 7):
        power = mono((1,))
        for _ in range(n - 1):
            power = power * mono((1,))
        for mu in enumerate_partitions(n):
            h = modified_macdonald(mu)
            spec = h.map_coefficients(lambda c: qt_substitute(c, ONE, ONE))
            assert spec == power, mu


def test_modified_macdonald_conjugation_symmetry():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            h = modified_macdonald(mu)
            h_conj_swapped = modified_macdonald(mu.conjugate()).map_coefficients(
                lambda c: c.swap_qt())
            assert h == h_conj_swapped, mu


def test_adams_examples():
    p1 = mono((1,))
    assert adams(p1, 2) == mono((2,))
    assert adams(p1.scale(Q), 2) == mono((2,), Q * Q)
    rng = random.Random(11)
    for _ in range(5):
        f = random_symfunc(rng)
        assert adams(adams(f, 2), 3) == adams(f, 6)


def test_adams_commutes_with_mul():
    rng = random.Random(23)
    for _ in range(5):
        a, b = random_symfunc(rng), random_symfunc(rng)
        assert adams(a * b, 2) == adams(a, 2) * adams(b, 2)


def test_coefficient_of_monomial():
    f = SymFunc(1, {(Partition((2,)),): ONE, (Partition((1, 1)),): ONE + Q})
    assert coefficient_of_monomial(f, (Partition((1, 1)),)) == ONE + Q
    h1 = modified_macdonald(Partition((1,)), alphabet=0, alphabets=2)
    h1b = modified_macdonald(Partition((1,)), alphabet=1, alphabets=2)
    prod = h1 * h1b
    assert coefficient_of_monomial(prod, (Partition((1,)), Partition((1,)))) == ONE


def test_p_exp_geometric_series():
    # pExp(z*a) for a single monomial a gives sum a^n z^n
    a = QTScalar.monomial(1, 4, 2)  # q^2 t
    f = SymSeries(0, 5, {1: SymFunc.scalar(0, a)})
    F = p_exp(f)
    for n in range(6):
        assert F.coefficient(n).coefficient(()) == a ** n


def test_p_exp_of_zero():
    assert p_exp(SymSeries.zero(0, 4)) == SymSeries.one(0, 4)


def test_p_exp_p_log_inverse():
    rng = random.Random(77)
    for alphabets in (0, 1, 2):
        f = SymSeries(alphabets, 4,
                      {1: random_symfunc(rng, alphabets, 1),
                       2: random_symfunc(rng, alphabets, 2)})
        assert p_log(p_exp(f)) == f
        F = SymSeries.one(alphabets, 4) + f
        assert p_exp(p_log(F)) == F


def test_p_log_geometric():
    # pLog(1/(1 - z a)) = z a for a single monomial a (inverse of the
    # geometric-series shape of p_exp)
    N = 4
    a = QTScalar.monomial(1, 2, 2)  # q t
    coeffs = {n: SymFunc.scalar(0, a ** n) for n in range(N + 1)}
    F = SymSeries(0, N, coeffs)
    assert p_log(F) == SymSeries(0, N, {1: SymFunc.scalar(0, a)})


def test_p_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        p_exp(SymSeries.one(0, 3))
    with pytest.raises(ValueError):
        p_log(SymSeries.zero(0, 3))


def test_series_rank_guard():
    s = SymSeries.one(0, 2)
    with pytest.raises(ValueError):
        s.coefficient(3)
