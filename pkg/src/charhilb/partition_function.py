"""Character variety partition function and its specializations.

The central object is the rank-graded series

    Omega_{g,k} = sum_n z^n sum_{lam |- n} H_lam(x_1) ... H_lam(x_k) * hook(lam, g),

with H_lam the modified Macdonald polynomial and

    hook(lam, g) = prod_{cells} (q^(a+1/2) - t^(l+1/2))^(2g)
                              / ((q^a - t^(l+1)) (q^(a+1) - t^l)).

Mixed Hodge polynomials are extracted as monomial coefficients of
-(1-q)(1-t) pLog Omega_{g,k}.  The genus-0 twisted specialization (a scalar
series in z) computes Euler characteristics of twisting bundles on Hilbert
schemes of points in the plane by torus localization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition, enumerate_partitions
from .qt import QTLaurent, QTScalar, one_minus_q_one_minus_t, qt_is_polynomial
from .symfunc import SymFunc, SymSeries, modified_macdonald, p_log


@dataclass(frozen=True)
class HookProduct:
    """The arm/leg weight of a partition at genus g."""
    lam: Partition
    g: int
    value: QTScalar


def hook_product(lam: Partition, g: int) -> HookProduct:
    num = QTLaurent.one()
    den = QTLaurent.one()
    for i, j in lam.cells():
        a, l = lam.arm(i, j), lam.leg(i, j)
        if g:
            factor = QTLaurent.monomial(1, 2 * a + 1, 0) \
                - QTLaurent.monomial(1, 0, 2 * l + 1)
            num = num * factor ** (2 * g)
        den = den * (QTLaurent.monomial(1, 2 * a, 0)
                     - QTLaurent.monomial(1, 0, 2 * l + 2))
        den = den * (QTLaurent.monomial(1, 2 * a + 2, 0)
                     - QTLaurent.monomial(1, 0, 2 * l))
    return HookProduct(lam, g, QTScalar(num, den))


def omega(g: int, k: int, truncation: int) -> SymSeries:
    """The partition function over k alphabets, truncated in rank."""
    if k < 1:
        raise ValueError("need at least one puncture")
    if truncation < 0:
        raise ValueError("truncation must be nonnegative")
    coeffs = {0: SymFunc.one(k)}
    for n in range(1, truncation + 1):
        total = SymFunc.zero(k)
        for lam in enumerate_partitions(n):
            hook = hook_product(lam, g).value
            expansion = modified_macdonald(lam).terms  # single alphabet
            # tensor the k copies of the expansion
            tensor = {(): QTScalar.one()}
            for _ in range(k):
                new = {}
                for key, c in tensor.items():
                    for (nu,), d in expansion.items():
                        new[key + (nu,)] = c * d
                tensor = new
            term = SymFunc(k, {key: c * hook for key, c in tensor.items()})
            total = total + term
        coeffs[n] = total
    return SymSeries(k, truncation, coeffs)


@dataclass(frozen=True)
class MultiplicityData:
    """Eigenvalue multiplicity data for k semisimple conjugacy classes.

    ``mu`` is a tuple of k Partitions of the same size n; ``eigenvalues``,
    when present, assigns to class i a tuple of distinct nonzero Fractions,
    one per part of mu[i].
    """
    mu: tuple
    eigenvalues: tuple = None

    def __post_init__(self):
        sizes = {m.size() for m in self.mu}
        if len(sizes) != 1:
            raise ValueError("all multiplicity vectors must have equal size")
        if self.eigenvalues is not None:
            if len(self.eigenvalues) != len(self.mu):
                raise ValueError("need one eigenvalue list per class")
            for m, evs in zip(self.mu, self.eigenvalues):
                if len(evs) != len(m.parts):
                    raise ValueError("need one eigenvalue per part")
                if len(set(evs)) != len(evs):
                    raise ValueError("eigenvalues within a class must be distinct")
                if any(e == 0 for e in evs):
                    raise ValueError("eigenvalues must be nonzero")

    @property
    def size(self):
        return self.mu[0].size()


def is_generic(data: MultiplicityData) -> bool:
    """Genericity of semisimple conjugacy data.

    Requires the product of all determinants to be 1 while no proper choice
    of eigenvalue sub-multisets, one of equal size n' from each class, has
    product 1 (0 < n' < n).  Brute-force enumeration over sub-multisets.
    """
    if data.eigenvalues is None:
        raise ValueError("eigenvalue assignment required")
    n = data.size
    dets = Fraction(1)
    for m, evs in zip(data.mu, data.eigenvalues):
        for part, e in zip(m.parts, evs):
            dets *= Fraction(e) ** part
    if dets != 1:
        return False
    for nprime in range(1, n):
        # per class, all achievable sub-multiset products of size nprime
        per_class = []
        for m, evs in zip(data.mu, data.eigenvalues):
            choices = set()

            def rec(idx, remaining, acc, parts=m.parts, evals=evs):
                if remaining == 0:
                    choices.add(acc)
                    return
                if idx == len(parts):
                    return
                top = min(parts[idx], remaining)
                for c in range(top + 1):
                    rec(idx + 1, remaining - c, acc * Fraction(evals[idx]) ** c)

            rec(0, nprime, Fraction(1))
            per_class.append(choices)
        # combine across classes
        totals = {Fraction(1)}
        for choices in per_class:
            totals = {t * c for t in totals for c in choices}
        if 1 in totals:
            return False
    return True


@dataclass(frozen=True)
class MixedHodgeResult:
    mu: tuple
    mh: QTScalar
    is_polynomial: bool


def mixed_hodge(g: int, k: int, mu_tuple, truncation=None) -> MixedHodgeResult:
    """Mixed Hodge polynomial with weight x^mu from the partition function.

    mu_tuple: k partitions of a common size n <= truncation.  Extracts the
    monomial coefficient of the rank-n part of -(1-q)(1-t) pLog Omega_{g,k}.
    """
    mu_tuple = tuple(m if isinstance(m, Partition) else Partition(m)
                     for m in mu_tuple)
    if len(mu_tuple) != k:
        raise ValueError(f"need {k} partitions, got {len(mu_tuple)}")
    sizes = {m.size() for m in mu_tuple}
    if len(sizes) != 1:
        raise ValueError("all mu_i must have the same size")
    n = sizes.pop()
    if truncation is None:
        truncation = n
    if n > truncation:
        raise ValueError(f"rank {n} exceeds truncation {truncation}")
    series = p_log(omega(g, k, truncation))
    coeff = series.coefficient(n).coefficient(mu_tuple)
    mh = -one_minus_q_one_minus_t() * coeff
    poly, laurent = qt_is_polynomial(mh)
    good = poly and laurent.has_nonnegative_exponents()
    return MixedHodgeResult(mu_tuple, mh, good)


def fq_point_count(mh: MixedHodgeResult, dim: int) -> QTLaurent:
    """Point count q^(dim/2) MH(q, 1/q) as a Laurent polynomial in q.

    The complex dimension is supplied by the caller.
    """
    if not mh.is_polynomial:
        raise ValueError("mixed Hodge value is not polynomial")
    if dim % 2:
        raise ValueError("complex dimension of a symplectic variety is even")
    out = {}
    for (a, b), c in mh.mh.num.terms.items():
        exp = (a - b + 2 * (dim // 2), 0)
        out[exp] = out.get(exp, Fraction(0)) + c
    return QTLaurent(out)


# ---------------------------------------------------------------------------
# genus-0 twisted specialization: scalar series in z
# ---------------------------------------------------------------------------


def omega_twisted(k: int, truncation: int) -> SymSeries:
    """sum_n z^n sum_{lam |- n} (-1)^{(k+1)n} (q^{n(lam')} t^{n(lam)})^{k+1} / hooks.

    Scalar series (zero alphabets); the hook denominator is the same product
    (q^a - t^(l+1)) (q^(a+1) - t^l) over cells as in the full partition
    function.
    """
    if k < 0:
        raise ValueError("twist parameter must be nonnegative")
    coeffs = {0: SymFunc.one(0)}
    sign = -1 if (k + 1) % 2 else 1
    for n in range(1, truncation + 1):
        total = QTScalar.zero()
        for lam in enumerate_partitions(n):
            num = QTLaurent.monomial(
                (sign ** n), 2 * (k + 1) * lam.conjugate().n_stat(),
                2 * (k + 1) * lam.n_stat())
            den = QTLaurent.one()
            for i, j in lam.cells():
                a, l = lam.arm(i, j), lam.leg(i, j)
                den = den * (QTLaurent.monomial(1, 2 * a, 0)
                             - QTLaurent.monomial(1, 0, 2 * l + 2))
                den = den * (QTLaurent.monomial(1, 2 * a + 2, 0)
                             - QTLaurent.monomial(1, 0, 2 * l))
            total = total + QTScalar(num, den)
        coeffs[n] = SymFunc.scalar(0, total)
    return SymSeries(0, truncation, coeffs)


def plog_twisted(k: int, truncation: int) -> SymSeries:
    """Plethystic logarithm of the twisted series."""
    return p_log(omega_twisted(k, truncation))


def twisted_coefficient(series: SymSeries, n: int) -> QTScalar:
    """The z^n coefficient of a scalar series."""
    return series.coefficient(n).coefficient(())


def euler_chi_hilb(n: int, k: int) -> QTScalar:
    """Equivariant Euler characteristic of the k-th twisting bundle on the
    Hilbert scheme of n points in the plane, via localization."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    series = omega_twisted(k, n)
    sign = -1 if (k * n) % 2 else 1
    return twisted_coefficient(series, n) * QTScalar.from_rational(sign)
