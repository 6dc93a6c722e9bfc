"""Exact scalar arithmetic: field axioms, cancellation, canonical forms."""

import random
from fractions import Fraction

import pytest

from charhilb.qt import (
    QTLaurent,
    QTScalar,
    one_minus_q_one_minus_t,
    qt_add,
    qt_div,
    qt_is_polynomial,
    qt_mul,
    qt_substitute,
)

Q = QTScalar.q()
T = QTScalar.t()
ONE = QTScalar.one()


def random_laurent(rng, nterms=3, maxexp=3):
    terms = {}
    for _ in range(rng.randint(1, nterms)):
        exp = (rng.randint(-maxexp, maxexp), rng.randint(-maxexp, maxexp))
        terms[exp] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return QTLaurent(terms)


def random_scalar(rng):
    num = random_laurent(rng)
    den = random_laurent(rng)
    while den.is_zero():
        den = random_laurent(rng)
    return QTScalar(num, den)


def test_add_common_denominator():
    # 1/(1-q) + 1/(1-t) = (2-q-t)/((1-q)(1-t))
    a = ONE / (ONE - Q)
    b = ONE / (ONE - T)
    expected = (2 * ONE - Q - T) / ((ONE - Q) * (ONE - T))
    assert qt_add(a, b) == expected


def test_cancellation_to_one():
    assert (Q - T) / (Q - T) == ONE


def test_gcd_reduction():
    assert (ONE - Q * Q) / (ONE - Q) == ONE + Q


def test_field_axioms_random():
    rng = random.Random(20240901)
    for _ in range(40):
        a, b, c = (random_scalar(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * (ONE / a) == ONE
            assert qt_div(b, a) * a == b


def test_canonicalization_idempotent():
    rng = random.Random(7)
    for _ in range(25):
        a = random_scalar(rng)
        again = QTScalar(a.num, a.den)
        assert again.num == a.num and again.den == a.den


def test_is_polynomial_roundtrip():
    rng = random.Random(99)
    for _ in range(25):
        p = random_laurent(rng)
        ok, quot = qt_is_polynomial(QTScalar(p))
        assert ok and quot == p


def test_is_polynomial_examples():
    ok, quot = qt_is_polynomial((ONE - Q * Q) / (ONE - Q))
    assert ok and quot == (ONE + Q).num
    ok, _ = qt_is_polynomial(ONE / (ONE - Q))
    assert not ok
    prod = one_minus_q_one_minus_t() * (QTScalar.from_rational(-1) / one_minus_q_one_minus_t())
    ok, quot = qt_is_polynomial(prod)
    assert ok and quot == QTLaurent.from_rational(-1)


def test_division_by_zero_reported():
    with pytest.raises(ZeroDivisionError):
        qt_div(ONE, QTScalar.zero())
    with pytest.raises(ZeroDivisionError):
        QTScalar(QTLaurent.one(), QTLaurent.zero())


def test_substitute_mixed_hodge_to_point_count():
    # q+t+4 at (q, 1/q) gives q + 1/q + 4
    mh = Q + T + 4 * ONE
    val = qt_substitute(mh, Q, ONE / Q)
    expected = Q + ONE / Q + 4 * ONE
    assert val == expected


def test_substitute_constants():
    assert qt_substitute(Q, ONE, ONE) == ONE


def test_substitute_half_exponent_symmetry():
    # (q^(1/2) - t^(1/2))^2 vanishes at t = q
    h = QTScalar.monomial(1, 1, 0) - QTScalar.monomial(1, 0, 1)
    sq = h * h
    assert qt_substitute(sq, Q, Q).is_zero()


def test_substitute_rational_function_values():
    rng = random.Random(5)
    for _ in range(10):
        a = random_scalar(rng)
        if not a.num.has_integral_exponents() or not a.den.has_integral_exponents():
            continue
        # substituting (q, t) is the identity
        assert qt_substitute(a, Q, T) == a


def test_half_exponents_stay_exact():
    h = QTScalar.monomial(1, 1, 0)      # q^(1/2)
    assert h * h == Q
    p = (h - QTScalar.monomial(1, 0, 1)) ** 2
    ok, lp = qt_is_polynomial(p)
    assert ok and lp.has_nonnegative_exponents() and not lp.has_integral_exponents()


def test_rendering():
    assert str((Q + T + 4 * ONE).num) == "q + t + 4"
    assert str(Q - T) == "q - t"
    assert str(ONE / (ONE - Q)) == "-1/(q - 1)"
    s = QTScalar.monomial(1, 1, 0)
    assert str(s) == "q^(1/2)"


def test_denominator_monic_and_monomial_free():
    rng = random.Random(13)
    for _ in range(30):
        a = random_scalar(rng)
        if a.is_zero():
            continue
        assert a.den.leading()[1] == 1
        assert a.den.min_exponents() == (0, 0)
