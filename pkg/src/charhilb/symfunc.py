"""Symmetric functions over Q(q^(1/2), t^(1/2)) in several alphabets.

Storage is in the monomial basis (coefficient extraction is a direct read);
products and Adams operations go through the power-sum basis, where they are
diagonal.  Two independent constructions of the modified Macdonald polynomial
are provided:

* ``modified_macdonald`` -- the combinatorial formula: sum over all fillings
  of the diagram weighted by q^inv t^maj.
* ``modified_macdonald_inner_product`` -- Gram-Schmidt orthogonalization for
  the (q,t)-deformed Hall scalar product, followed by the integral form and
  the plethystic twist.  Serves as an independent cross-check.

Conventions for the filling statistics (diagrams in English notation, row 0
the longest): a descent is a cell whose entry exceeds the entry directly
above it; maj adds leg+1 over descents; cells attack within a row and between
adjacent rows when the lower cell sits strictly to the right; the reading
order runs through rows bottom to top, left to right; inv counts attacking
inversions minus arms of descents.  The convention is pinned by the anchored
value H[2] = m[2] + (1+q) m[1,1].
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, enumerate_partitions
from .qt import QTLaurent, QTScalar

# ---------------------------------------------------------------------------
# power-sum <-> monomial conversion tables (single alphabet, cached by degree)
# ---------------------------------------------------------------------------


def _mul_monomial_by_powersum(coeffs, r):
    """Monomial-basis expansion of (sum c_nu m_nu) * p_r.

    m_nu * p_r = sum over distinct part values u of nu together with u = 0 of
    mult_{u+r}(mu) * m_mu, where mu = nu with one u replaced by u + r.
    """
    out = {}
    for nu, c in coeffs.items():
        values = set(nu) | {0}
        for u in values:
            work = list(nu)
            if u:
                work.remove(u)
            work.append(u + r)
            mu = tuple(sorted(work, reverse=True))
            mult = mu.count(u + r)
            out[mu] = out.get(mu, Fraction(0)) + c * mult
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _p_to_m_table(n):
    """dict: partition -> dict(partition -> Fraction), p_lam = sum c m_mu."""
    table = {}
    for lam in enumerate_partitions(n):
        coeffs = {(): Fraction(1)}
        for part in lam.parts:
            coeffs = _mul_monomial_by_powersum(coeffs, part)
        table[lam] = {Partition(mu): c for mu, c in coeffs.items()}
    return table


@lru_cache(maxsize=None)
def _m_to_p_table(n):
    """dict: partition -> dict(partition -> Fraction), m_mu = sum c p_lam."""
    parts = enumerate_partitions(n)
    p2m = _p_to_m_table(n)
    idx = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    # invert the matrix M[i][j] = coeff of m_j in p_i
    mat = [[Fraction(0)] * size for _ in range(size)]
    for lam, row in p2m.items():
        for mu, c in row.items():
            mat[idx[lam]][idx[mu]] = c
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(size)]
           for i in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if mat[r][col])
        mat[col], mat[piv] = mat[piv], mat[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        lead = mat[col][col]
        mat[col] = [x / lead for x in mat[col]]
        inv[col] = [x / lead for x in inv[col]]
        for r in range(size):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # m_mu = sum_lam inv[mu][lam] p_lam
    table = {}
    for mu in parts:
        row = {}
        for lam in parts:
            c = inv[idx[mu]][idx[lam]]
            if c:
                row[lam] = c
        table[mu] = row
    return table


def _merge_partitions(a: Partition, b: Partition) -> Partition:
    return Partition(tuple(sorted(a.parts + b.parts, reverse=True)))


# ---------------------------------------------------------------------------
# SymFunc
# ---------------------------------------------------------------------------


class SymFunc:
    """Tensor of symmetric functions over several alphabets, monomial basis.

    ``terms`` maps k-tuples of Partitions to nonzero QTScalar coefficients;
    the key (mu_1, ..., mu_k) stands for m_{mu_1}(x_1) ... m_{mu_k}(x_k).
    """

    __slots__ = ("alphabets", "terms")

    def __init__(self, alphabets, terms=None):
        if alphabets < 0:
            raise ValueError("alphabet count must be >= 0")
        self.alphabets = alphabets
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if not c.is_zero():
                    self.terms[tuple(key)] = c

    @classmethod
    def zero(cls, alphabets):
        return cls(alphabets)

    @classmethod
    def one(cls, alphabets):
        key = tuple(Partition() for _ in range(alphabets))
        return cls(alphabets, {key: QTScalar.one()})

    @classmethod
    def scalar(cls, alphabets, c: QTScalar):
        key = tuple(Partition() for _ in range(alphabets))
        return cls(alphabets, {key: c})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.alphabets != other.alphabets:
            raise ValueError("alphabet count mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        r = SymFunc.__new__(SymFunc)
        r.alphabets, r.terms = self.alphabets, out
        return r

    def __neg__(self):
        r = SymFunc.__new__(SymFunc)
        r.alphabets = self.alphabets
        r.terms = {key: -c for key, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: QTScalar):
        if c.is_zero():
            return SymFunc.zero(self.alphabets)
        r = SymFunc.__new__(SymFunc)
        r.alphabets = self.alphabets
        r.terms = {key: v * c for key, v in self.terms.items()}
        return r

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.alphabets == other.alphabets \
            and self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    def coefficient(self, key) -> QTScalar:
        return self.terms.get(tuple(key), QTScalar.zero())

    def map_coefficients(self, fn):
        out = {}
        for key, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                out[key] = v
        r = SymFunc.__new__(SymFunc)
        r.alphabets, r.terms = self.alphabets, out
        return r

    # -- basis changes -------------------------------------------------------

    def _convert(self, table_fn):
        terms = self.terms
        for slot in range(self.alphabets):
            out = {}
            for key, coef in terms.items():
                row = table_fn(key[slot].size())[key[slot]]
                for newpart, f in row.items():
                    nkey = key[:slot] + (newpart,) + key[slot + 1:]
                    s = out.get(nkey)
                    add = coef * f
                    s = add if s is None else s + add
                    if s.is_zero():
                        out.pop(nkey, None)
                    else:
                        out[nkey] = s
            terms = out
        return terms

    def to_powersum(self):
        """Terms dict keyed the same way but meaning p_{mu_1} ... p_{mu_k}."""
        return self._convert(_m_to_p_table)

    @classmethod
    def _build_from_powersum(cls, alphabets, pterms):
        f = SymFunc.__new__(SymFunc)
        f.alphabets, f.terms = alphabets, dict(pterms)
        return cls(alphabets, f._convert(_p_to_m_table))

    # -- ring operations ------------------------------------------------------

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return SymFunc.zero(self.alphabets)
        pa, pb = self.to_powersum(), other.to_powersum()
        out = {}
        for k1, c1 in pa.items():
            for k2, c2 in pb.items():
                key = tuple(_merge_partitions(a, b) for a, b in zip(k1, k2))
                s = out.get(key)
                add = c1 * c2
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return SymFunc._build_from_powersum(self.alphabets, out)

    def adams(self, n):
        """Adams operation on all variables: p_m -> p_{mn}, q -> q^n, t -> t^n."""
        if n == 1:
            return self
        pt = self.to_powersum()
        out = {}
        for key, c in pt.items():
            nkey = tuple(Partition(tuple(p * n for p in mu.parts)) for mu in key)
            out[nkey] = c.adams(n)
        return SymFunc._build_from_powersum(self.alphabets, out)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=lambda k: tuple(t.parts for t in k)):
            c = self.terms[key]
            mono = "m[" + "|".join(",".join(str(p) for p in mu.parts) for mu in key) + "]"
            bits.append(f"({c})*{mono}")
        return " + ".join(bits)

    def __repr__(self):
        return f"SymFunc({self})"


def sym_mul(a: SymFunc, b: SymFunc) -> SymFunc:
    return a * b


def adams(f, n: int):
    """Adams operation on a SymFunc or SymSeries."""
    return f.adams(n)


def coefficient_of_monomial(f: SymFunc, mu_tuple) -> QTScalar:
    """Coefficient of the monomial x^mu, mu_i weakly decreasing per alphabet.

    Since each mu_i is a partition, this is the stored coefficient of
    m_{mu_1} x ... x m_{mu_k}.
    """
    key = tuple(mu if isinstance(mu, Partition) else Partition(mu)
                for mu in mu_tuple)
    return f.coefficient(key)


# ---------------------------------------------------------------------------
# SymSeries: rank-graded series with SymFunc coefficients
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _mobius(n):
    if n == 1:
        return 1
    m, res = n, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


class SymSeries:
    """Truncated series sum_n z^n f_n with f_n a SymFunc over k alphabets.

    The grading variable z tracks the rank; Adams operations act on z as well
    as on q, t and every alphabet.
    """

    __slots__ = ("alphabets", "truncation", "coeffs")

    def __init__(self, alphabets, truncation, coeffs=None):
        self.alphabets = alphabets
        self.truncation = truncation
        self.coeffs = {}
        if coeffs:
            for n, f in coeffs.items():
                if 0 <= n <= truncation and not f.is_zero():
                    self.coeffs[n] = f

    @classmethod
    def one(cls, alphabets, truncation):
        return cls(alphabets, truncation, {0: SymFunc.one(alphabets)})

    @classmethod
    def zero(cls, alphabets, truncation):
        return cls(alphabets, truncation)

    def coefficient(self, n) -> SymFunc:
        if n > self.truncation:
            raise ValueError(f"rank {n} exceeds truncation {self.truncation}")
        return self.coeffs.get(n, SymFunc.zero(self.alphabets))

    def _check(self, other):
        if self.alphabets != other.alphabets:
            raise ValueError("alphabet count mismatch")

    def __add__(self, other):
        self._check(other)
        N = min(self.truncation, other.truncation)
        out = {}
        for n in range(N + 1):
            f = self.coeffs.get(n)
            g = other.coeffs.get(n)
            if f is None and g is None:
                continue
            h = g if f is None else (f if g is None else f + g)
            if not h.is_zero():
                out[n] = h
        return SymSeries(self.alphabets, N, out)

    def __sub__(self, other):
        return self + other.scale(QTScalar.from_rational(-1))

    def scale(self, c: QTScalar):
        return SymSeries(self.alphabets, self.truncation,
                         {n: f.scale(c) for n, f in self.coeffs.items()})

    def __mul__(self, other):
        self._check(other)
        N = min(self.truncation, other.truncation)
        out = {}
        for n1, f1 in self.coeffs.items():
            for n2, f2 in other.coeffs.items():
                n = n1 + n2
                if n > N:
                    continue
                prod = f1 * f2
                if n in out:
                    out[n] = out[n] + prod
                else:
                    out[n] = prod
        return SymSeries(self.alphabets, N, out)

    def adams(self, n):
        out = {}
        for r, f in self.coeffs.items():
            if r * n <= self.truncation:
                out[r * n] = f.adams(n)
        return SymSeries(self.alphabets, self.truncation, out)

    def __eq__(self, other):
        return isinstance(other, SymSeries) and self.alphabets == other.alphabets \
            and self.truncation == other.truncation and self.coeffs == other.coeffs

    def __repr__(self):
        bits = [f"z^{n}*({f})" for n, f in sorted(self.coeffs.items())]
        return "SymSeries(" + " + ".join(bits) + f" + O(z^{self.truncation + 1}))"


def _series_log(F: SymSeries) -> SymSeries:
    """Formal log in the rank grading; constant term must be 1."""
    if F.coefficient(0) != SymFunc.one(F.alphabets):
        raise ValueError("series log requires constant term 1")
    N = F.truncation
    G = SymSeries(F.alphabets, N, {n: f for n, f in F.coeffs.items() if n > 0})
    total = SymSeries.zero(F.alphabets, N)
    power = SymSeries.one(F.alphabets, N)
    for j in range(1, N + 1):
        power = power * G
        if not power.coeffs:
            break
        total = total + power.scale(
            QTScalar.from_rational(Fraction((-1) ** (j + 1), j)))
    return total


def p_exp(f: SymSeries) -> SymSeries:
    """Plethystic exponential; the rank-0 coefficient of f must vanish."""
    if not f.coefficient(0).is_zero():
        raise ValueError("pExp requires vanishing constant term")
    N = f.truncation
    s = SymSeries.zero(f.alphabets, N)
    for n in range(1, N + 1):
        s = s + f.adams(n).scale(QTScalar.from_rational(Fraction(1, n)))
    total = SymSeries.one(f.alphabets, N)
    power = SymSeries.one(f.alphabets, N)
    for j in range(1, N + 1):
        power = power * s
        if not power.coeffs:
            break
        total = total + power.scale(
            QTScalar.from_rational(Fraction(1, factorial(j))))
    return total


def p_log(F: SymSeries) -> SymSeries:
    """Plethystic logarithm; the rank-0 coefficient of F must be 1."""
    logF = _series_log(F)
    N = F.truncation
    total = SymSeries.zero(F.alphabets, N)
    for n in range(1, N + 1):
        mu = _mobius(n)
        if mu:
            total = total + logF.adams(n).scale(
                QTScalar.from_rational(Fraction(mu, n)))
    return total


# ---------------------------------------------------------------------------
# modified Macdonald polynomials
# ---------------------------------------------------------------------------


def _multiset_arrangements(counts):
    """All distinct sequences using entry i+1 exactly counts[i] times."""
    total = sum(counts)
    seq = [0] * total
    counts = list(counts)

    def rec(pos):
        if pos == total:
            yield tuple(seq)
            return
        for v in range(len(counts)):
            if counts[v]:
                counts[v] -= 1
                seq[pos] = v + 1
                yield from rec(pos + 1)
                counts[v] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _macdonald_fillings(parts: tuple):
    """Monomial expansion of the modified Macdonald polynomial for mu.

    Returns dict Partition -> QTScalar.  For each partition content, runs over
    all arrangements of that content in the diagram and accumulates
    q^inv t^maj; symmetry of the result makes one content per monomial basis
    element sufficient.
    """
    mu = Partition(parts)
    n = mu.size()
    if n == 0:
        return {Partition(): QTScalar.one()}
    # reading order: rows from bottom (last) to top, left to right
    cells = [(i, j) for i in range(len(mu.parts) - 1, -1, -1)
             for j in range(mu.parts[i])]
    pos = {cell: idx for idx, cell in enumerate(cells)}
    # descent candidates: (cell index, index of cell above, arm, leg+1)
    descents = []
    for i, j in mu.cells():
        if i >= 1:
            descents.append((pos[(i, j)], pos[(i - 1, j)],
                             mu.arm(i, j), mu.leg(i, j) + 1))
    # attacking pairs (u before v in reading order): same row, or adjacent
    # rows with the cell in the longer row strictly to the left
    attacks = []
    for i, j in mu.cells():
        for j2 in range(j + 1, mu.parts[i]):
            attacks.append((pos[(i, j)], pos[(i, j2)]))
        if i >= 1:
            for j2 in range(j):
                attacks.append((pos[(i, j)], pos[(i - 1, j2)]))
    out = {}
    for lam in enumerate_partitions(n):
        counts = list(lam.parts) + [0] * (n - len(lam.parts))
        acc = {}
        for filling in _multiset_arrangements(counts):
            maj = 0
            inv = 0
            for u, above, arm, legp1 in descents:
                if filling[u] > filling[above]:
                    maj += legp1
                    inv -= arm
            for u, v in attacks:
                if filling[u] > filling[v]:
                    inv += 1
            key = (2 * inv, 2 * maj)
            acc[key] = acc.get(key, 0) + 1
        assert all(e[0] >= 0 for e in acc)
        out[lam] = QTScalar(QTLaurent(
            {exp: Fraction(c) for exp, c in acc.items()}))
    return out


def modified_macdonald(mu: Partition, alphabet: int = 0,
                       alphabets: int = 1) -> SymFunc:
    """Modified Macdonald polynomial in the given alphabet slot."""
    if mu.size() < 1:
        raise ValueError("mu must be nonempty")
    expansion = _macdonald_fillings(mu.parts)
    empty = Partition()
    terms = {}
    for lam, c in expansion.items():
        key = tuple(lam if s == alphabet else empty for s in range(alphabets))
        terms[key] = c
    return SymFunc(alphabets, terms)


def _z_lambda_qt(lam: Partition) -> QTScalar:
    """Deformed square norm of p_lam for the (q,t) Hall pairing."""
    mult = {}
    for p in lam.parts:
        mult[p] = mult.get(p, 0) + 1
    z = Fraction(1)
    for p, m in mult.items():
        z *= Fraction(p) ** m * factorial(m)
    one = QTScalar.one()
    q, t = QTScalar.q(), QTScalar.t()
    val = QTScalar.from_rational(z)
    for p in lam.parts:
        val = val * (one - q ** p) / (one - t ** p)
    return val


@lru_cache(maxsize=None)
def _macdonald_p_basis(n: int):
    """Macdonald P_lam for all lam of size n, in power-sum coordinates.

    Gram-Schmidt for the deformed Hall pairing, processing partitions from the
    bottom of dominance order upward (ascending lex refines it), so that each
    P_lam is corrected only by already-built P_mu with mu dominated by lam;
    unitriangularity in the monomial basis then identifies the output with
    Macdonald's P_lam.
    """
    parts = list(reversed(enumerate_partitions(n)))
    m2p = _m_to_p_table(n)

    def inner(u, v):
        total = QTScalar.zero()
        for rho, c in u.items():
            if rho in v:
                total = total + c * v[rho] * _z_lambda_qt(rho)
        return total

    P = {}
    norms = {}
    order = []
    for lam in parts:
        v = dict(m2p[lam])
        for mu in order:
            c = inner(m2p[lam], P[mu]) / norms[mu]
            if not c.is_zero():
                for rho, w in P[mu].items():
                    s = v.get(rho, QTScalar.zero()) - c * w
                    if s.is_zero():
                        v.pop(rho, None)
                    else:
                        v[rho] = s
        P[lam] = v
        norms[lam] = inner(v, v)
        order.append(lam)
    return P


def modified_macdonald_inner_product(mu: Partition) -> dict:
    """Independent construction of the modified Macdonald polynomial.

    Returns the monomial expansion dict Partition -> QTScalar via the integral
    form of the orthogonalized P_mu and the plethystic substitution.
    """
    n = mu.size()
    P = _macdonald_p_basis(n)[mu]
    one = QTScalar.one()
    q, t = QTScalar.q(), QTScalar.t()
    cmu = one
    for i, j in mu.cells():
        cmu = cmu * (one - q ** mu.arm(i, j) * t ** (mu.leg(i, j) + 1))
    # J_mu in power sums, then p_r -> p_r / (1 - t^r), then t -> 1/t,
    # then multiply by t^{n(mu)}
    shift = QTScalar.monomial(1, 0, 2 * mu.n_stat())
    pterms = {}
    for rho, c in P.items():
        val = c * cmu
        for r in rho.parts:
            val = val / (one - t ** r)
        val = QTScalar._make(val.num.subs_exponents(lambda a, b: a, lambda a, b: -b),
                             val.den.subs_exponents(lambda a, b: a, lambda a, b: -b))
        pterms[(rho,)] = val * shift
    f = SymFunc._build_from_powersum(1, pterms)
    return {key[0]: c for key, c in f.terms.items()}
