"""Exact arithmetic over the field Q(q^(1/2), t^(1/2)).

Two layers:

* ``QTLaurent`` -- Laurent polynomials in q^(1/2) and t^(1/2) with rational
  coefficients.  Exponents are half-integers, stored as *doubled* integers so
  that all bookkeeping stays in plain integer arithmetic.
* ``QTScalar`` -- the fraction field.  Every value is kept in a canonical
  reduced form: numerator and denominator share no non-unit factor (complete
  bivariate gcd cancellation), the denominator is a genuine polynomial with no
  monomial factor, and its leading coefficient under graded lex order is 1.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd

# Coefficient domain.  Fraction already maintains gcd(num, den) = 1, den >= 1.
BigRational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _term_order_key(exp):
    """Graded lexicographic key on doubled exponent pairs (a, b)."""
    a, b = exp
    return (a + b, a, b)


# ---------------------------------------------------------------------------
# Integer polynomial helpers for the bivariate gcd.
#
# A polynomial in Z[Q][T] (Q = q^(1/2), T = t^(1/2)) is a list indexed by the
# T-degree whose entries are lists of integer coefficients indexed by the
# Q-degree.  Trailing zeros are always trimmed.
# ---------------------------------------------------------------------------


def _u_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _u_trim(out)


def _u_add_scaled(a, b, c, shift=0):
    """a + c * b * Q^shift for integer polynomials."""
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for j, bj in enumerate(b):
        if bj:
            out[j + shift] += c * bj
    return _u_trim(out)


def _u_content(a):
    g = 0
    for c in a:
        g = _igcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _u_primitive(a):
    g = _u_content(a)
    if g <= 1:
        return list(a)
    return [c // g for c in a]


def _u_divexact(a, b):
    """Exact division in Z[Q]; b must divide a."""
    if not a:
        return []
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        if len(r) == k + len(b):
            c = r[-1]
            if c % lb != 0:
                raise ArithmeticError("inexact univariate division")
            q[k] = c // lb
            r = _u_add_scaled(r, b, -q[k], shift=k)
        _u_trim(r)
    if r:
        raise ArithmeticError("inexact univariate division")
    return _u_trim(q)


# Primes for the modular coprimality fast path.  The shortcut is sound: a
# nontrivial gcd over Q survives reduction mod p and evaluation as long as the
# tested leading coefficient does not vanish, so a constant modular gcd proves
# coprimality.  A spurious nontrivial modular gcd merely falls back to the
# exact PRS computation.
_PROBE_PRIMES = ((1 << 61) - 1, (1 << 31) - 1, 10 ** 9 + 7)


def _u_gcd_deg_modp(a, b, p):
    """Degree of gcd(a, b) in F_p[Q]; inputs nonzero mod p after reduction."""
    A = [c % p for c in a]
    B = [c % p for c in b]
    _u_trim(A)
    _u_trim(B)
    while B:
        # A mod B over F_p
        inv = pow(B[-1], p - 2, p)
        while len(A) >= len(B):
            c = (A[-1] * inv) % p
            if c:
                shift = len(A) - len(B)
                for j, bj in enumerate(B):
                    A[j + shift] = (A[j + shift] - c * bj) % p
            A.pop()
            _u_trim(A)
        A, B = B, A
    return len(A) - 1


def _u_coprime_probe(a, b):
    """True if a, b in Z[Q] are provably coprime (up to integer content)."""
    if len(a) < 2 and len(b) < 2:
        return True
    for p in _PROBE_PRIMES:
        if a[-1] % p == 0 and b[-1] % p == 0:
            continue
        if a[-1] % p == 0:
            a, b = b, a
        Ared = [c % p for c in a]
        Bred = [c % p for c in b]
        if not _u_trim(list(Bred)):
            continue
        if _u_gcd_deg_modp(Ared, Bred, p) == 0:
            return True
        return False
    return False


def _u_gcd(a, b):
    """Primitive-PRS gcd in Z[Q], normalized primitive with positive lead."""
    a, b = _u_primitive(a), _u_primitive(b)
    if not a:
        g = b
    elif not b:
        g = a
    elif _u_coprime_probe(a, b):
        return [1]
    else:
        while b:
            # pseudo remainder of a by b
            r = list(a)
            lb = b[-1]
            while len(r) >= len(b):
                c = r[-1]
                r = [lb * x for x in r]
                r = _u_add_scaled(r, b, -c, shift=len(r) - len(b))
                _u_trim(r)
            a, b = b, _u_primitive(r)
        g = a
    g = _u_primitive(g)
    if g and g[-1] < 0:
        g = [-c for c in g]
    return g


def _b_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _b_content(p):
    c = []
    for coef in p:
        c = _u_gcd(c, coef)
        if c == [1]:
            return c
    return c


def _b_primitive(p):
    c = _b_content(p)
    if not c or c == [1]:
        return [list(x) for x in p]
    return [_u_divexact(x, c) if x else [] for x in p]


def _b_mul_u(p, u):
    return _b_trim([_u_mul(x, u) for x in p])


def _b_pseudo_rem(a, b):
    """Pseudo remainder of a by b as polynomials in T over Z[Q]."""
    r = [list(x) for x in a]
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [_u_mul(x, lb) for x in r]
        for j in range(len(b)):
            r[j + shift] = _u_add_scaled(r[j + shift], _u_mul(b[j], lr), -1)
        _b_trim(r)
    return r


def _b_degrees(a):
    dT = len(a) - 1
    dQ = max((len(row) - 1 for row in a if row), default=-1)
    return dQ, dT


def _b_coprime_probe(a, b):
    """True if primitive a, b in Z[Q][T] are provably coprime.

    Evaluates at T = r and Q = s modulo a large prime.  A common factor with
    positive Q-degree survives the T-evaluation because its Q-leading
    coefficient divides that of a, which is checked to be nonzero; symmetric
    for the T-direction.  Constant gcds in both directions therefore prove
    coprimality; anything else falls back to the exact computation.
    """
    dQa, dTa = _b_degrees(a)
    dQb, dTb = _b_degrees(b)
    if min(dQa, dTa, dQb, dTb) < 1:
        return False
    p = _PROBE_PRIMES[0]
    # Q-direction: evaluate T = r
    lcQ = [row[dQa] if len(row) > dQa else 0 for row in a]  # poly in T
    for r in range(2, 40):
        if sum(c * pow(r, j, p) for j, c in enumerate(lcQ)) % p:
            break
    else:
        return False
    ar = [0] * (dQa + 1)
    for j, row in enumerate(a):
        rj = pow(r, j, p)
        for i, c in enumerate(row):
            ar[i] = (ar[i] + c * rj) % p
    br = [0] * (dQb + 1)
    for j, row in enumerate(b):
        rj = pow(r, j, p)
        for i, c in enumerate(row):
            br[i] = (br[i] + c * rj) % p
    _u_trim(ar), _u_trim(br)
    if not ar or not br or _u_gcd_deg_modp(ar, br, p) != 0:
        return False
    # T-direction: evaluate Q = s
    lcT = a[dTa]
    for s in range(2, 40):
        if sum(c * pow(s, i, p) for i, c in enumerate(lcT)) % p:
            break
    else:
        return False
    at = [sum(c * pow(s, i, p) for i, c in enumerate(row)) % p for row in a]
    bt = [sum(c * pow(s, i, p) for i, c in enumerate(row)) % p for row in b]
    _u_trim(at), _u_trim(bt)
    if not at or not bt or _u_gcd_deg_modp(at, bt, p) != 0:
        return False
    return True


def _b_gcd(a, b):
    """Gcd in Z[Q][T] via content/primitive-part recursion (outer variable T)."""
    a, b = _b_trim([list(x) for x in a]), _b_trim([list(x) for x in b])
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, cb = _b_content(a), _b_content(b)
        c = _u_gcd(ca, cb)
        pa, pb = _b_primitive(a), _b_primitive(b)
        if _b_coprime_probe(pa, pb):
            g = [c]
        else:
            while pb:
                r = _b_pseudo_rem(pa, pb)
                pa, pb = pb, _b_primitive(_b_trim(r))
            g = _b_mul_u(_b_primitive(pa), c)
    g = _b_trim(g)
    if g:
        lead = g[-1]
        if lead and lead[-1] < 0:
            g = [[-c for c in x] for x in g]
    return g


class QTLaurent:
    """Laurent polynomial in q^(1/2), t^(1/2) over Q.

    ``terms`` maps doubled exponent pairs (a, b) to nonzero Fractions, so the
    stored pair (a, b) represents the monomial q^(a/2) * t^(b/2).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    self.terms[exp] = Fraction(c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): _ONE})

    @classmethod
    def from_rational(cls, c):
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, c, a2, b2):
        """c * q^(a2/2) * t^(b2/2)."""
        return cls({(a2, b2): Fraction(c)})

    @classmethod
    def var_q(cls):
        return cls({(2, 0): _ONE})

    @classmethod
    def var_t(cls):
        return cls({(0, 2): _ONE})

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): _ONE}

    def is_monomial(self):
        return len(self.terms) == 1

    def has_integral_exponents(self):
        return all(a % 2 == 0 and b % 2 == 0 for a, b in self.terms)

    def has_nonnegative_exponents(self):
        return all(a >= 0 and b >= 0 for a, b in self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, _ZERO) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        r = QTLaurent.__new__(QTLaurent)
        r.terms = out
        return r

    def __neg__(self):
        r = QTLaurent.__new__(QTLaurent)
        r.terms = {exp: -c for exp, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                exp = (a1 + a2, b1 + b2)
                s = out.get(exp, _ZERO) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        r = QTLaurent.__new__(QTLaurent)
        r.terms = out
        return r

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return QTLaurent.zero()
        r = QTLaurent.__new__(QTLaurent)
        r.terms = {exp: v * c for exp, v in self.terms.items()}
        return r

    def shift(self, a2, b2):
        """Multiply by the monomial q^(a2/2) t^(b2/2)."""
        r = QTLaurent.__new__(QTLaurent)
        r.terms = {(a + a2, b + b2): c for (a, b), c in self.terms.items()}
        return r

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a QTLaurent")
        result = QTLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, QTLaurent) and self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    # -- structure ----------------------------------------------------------

    def min_exponents(self):
        if not self.terms:
            return (0, 0)
        return (min(a for a, _ in self.terms), min(b for _, b in self.terms))

    def leading(self):
        """(exponent, coefficient) of the graded-lex-largest term."""
        exp = max(self.terms, key=_term_order_key)
        return exp, self.terms[exp]

    def adams(self, n):
        """Substitution q -> q^n, t -> t^n."""
        r = QTLaurent.__new__(QTLaurent)
        r.terms = {(a * n, b * n): c for (a, b), c in self.terms.items()}
        return r

    def subs_exponents(self, fa, fb):
        """Monomial substitution sending (a, b) to (fa(a,b), fb(a,b)).

        Used for q <-> t swaps and q -> q^(-1) style substitutions.
        """
        out = {}
        for (a, b), c in self.terms.items():
            exp = (fa(a, b), fb(a, b))
            s = out.get(exp, _ZERO) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        r = QTLaurent.__new__(QTLaurent)
        r.terms = out
        return r

    def swap_qt(self):
        return self.subs_exponents(lambda a, b: b, lambda a, b: a)

    def eval_doubled(self, qh, th):
        """Evaluate with qh = q^(1/2), th = t^(1/2) given as Fractions."""
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * qh ** a * th ** b
        return total

    # -- division -----------------------------------------------------------

    def exact_div(self, other):
        """Exact division; raises ArithmeticError if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division of QTLaurent by zero")
        if self.is_zero():
            return QTLaurent.zero()
        if other.is_monomial():
            (a0, b0), c0 = next(iter(other.terms.items()))
            r = QTLaurent.__new__(QTLaurent)
            r.terms = {(a - a0, b - b0): c / c0 for (a, b), c in self.terms.items()}
            return r
        rem = self
        (ea, eb), lc = other.leading()
        qterms = {}
        while not rem.is_zero():
            (ra, rb), rc = rem.leading()
            qexp = (ra - ea, rb - eb)
            coef = rc / lc
            qterms[qexp] = coef
            rem = rem - other.shift(*qexp).scale(coef)
            if not rem.is_zero():
                if _term_order_key(rem.leading()[0]) >= _term_order_key((ra, rb)):
                    raise ArithmeticError("inexact Laurent division")
        return QTLaurent(qterms)

    def divides(self, other):
        try:
            other.exact_div(self)
            return True
        except ArithmeticError:
            return False

    # -- gcd ----------------------------------------------------------------

    def _to_int_poly(self):
        """Shift exponents to >= 0 and clear denominators; returns Z[Q][T] lists."""
        amin, bmin = self.min_exponents()
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // _igcd(den, c.denominator)
        tdeg = max(b - bmin for _, b in self.terms) if self.terms else 0
        rows = [[] for _ in range(tdeg + 1)]
        for (a, b), c in self.terms.items():
            i, j = a - amin, b - bmin
            row = rows[j]
            if len(row) <= i:
                row.extend([0] * (i + 1 - len(row)))
            row[i] = int(c * den)
        for row in rows:
            _u_trim(row)
        return _b_trim(rows)

    @staticmethod
    def _from_int_poly(rows):
        terms = {}
        for j, row in enumerate(rows):
            for i, c in enumerate(row):
                if c:
                    terms[(i, j)] = Fraction(c)
        return QTLaurent(terms)

    @staticmethod
    def gcd(a, b):
        """Gcd up to units; normalized with exponents >= 0, primitive over Z,
        positive leading coefficient.  Returns 1 when either input is a
        monomial (monomials are units in the Laurent ring)."""
        if a.is_zero() or b.is_zero():
            raise ValueError("gcd with zero")
        if a.is_monomial() or b.is_monomial():
            return QTLaurent.one()
        g = _b_gcd(a._to_int_poly(), b._to_int_poly())
        return QTLaurent._from_int_poly(g)

    # -- rendering ----------------------------------------------------------

    @staticmethod
    def _exp_str(a2):
        if a2 % 2 == 0:
            return str(a2 // 2)
        return f"{a2}/2"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=_term_order_key, reverse=True):
            a, b = exp
            c = self.terms[exp]
            factors = []
            if a:
                factors.append("q" if a == 2 else f"q^({self._exp_str(a)})")
            if b:
                factors.append("t" if b == 2 else f"t^({self._exp_str(b)})")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"QTLaurent({self})"


class QTScalar:
    """Element of the fraction field Q(q^(1/2), t^(1/2)) in canonical form.

    Canonical form: numerator and denominator have no common non-unit factor,
    the denominator has minimal exponents (0, 0) in both variables (monomial
    factors are pushed into the numerator, which may be a genuine Laurent
    polynomial), and the denominator's graded-lex leading coefficient is 1.
    Values are immutable; all operations return new objects.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = QTLaurent.one()
        if den.is_zero():
            raise ZeroDivisionError("QTScalar with zero denominator")
        self.num, self.den = self._reduce(num, den)

    @staticmethod
    def _reduce(num, den):
        if num.is_zero():
            return QTLaurent.zero(), QTLaurent.one()
        if not den.is_monomial() and not num.is_monomial():
            g = QTLaurent.gcd(num, den)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
        return QTScalar._normalize(num, den)

    @staticmethod
    def _normalize(num, den):
        """Monic, monomial-free denominator; assumes num/den already coprime."""
        amin, bmin = den.min_exponents()
        if amin or bmin:
            den = den.shift(-amin, -bmin)
            num = num.shift(-amin, -bmin)
        _, lc = den.leading()
        if lc != 1:
            den = den.scale(1 / lc)
            num = num.scale(1 / lc)
        return num, den

    @classmethod
    def _make(cls, num, den):
        """Build from an already-coprime pair, skipping the gcd."""
        r = cls.__new__(cls)
        if num.is_zero():
            r.num, r.den = QTLaurent.zero(), QTLaurent.one()
        else:
            r.num, r.den = cls._normalize(num, den)
        return r

    @staticmethod
    def _gcd_or_one(a, b):
        if a.is_monomial() or b.is_monomial():
            return QTLaurent.one()
        return QTLaurent.gcd(a, b)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(QTLaurent.zero())

    @classmethod
    def one(cls):
        return cls(QTLaurent.one())

    @classmethod
    def from_rational(cls, c):
        return cls(QTLaurent.from_rational(c))

    @classmethod
    def q(cls):
        return cls(QTLaurent.var_q())

    @classmethod
    def t(cls):
        return cls(QTLaurent.var_t())

    @classmethod
    def monomial(cls, c, a2, b2):
        return cls(QTLaurent.monomial(c, a2, b2))

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        # write the denominators as g*b1, g*d1 with b1, d1 coprime; the new
        # numerator can then only share factors with g (Henrici's scheme)
        if self.den == other.den:
            g, b1, d1 = self.den, QTLaurent.one(), QTLaurent.one()
        else:
            g = self._gcd_or_one(self.den, other.den)
            if g.is_one():
                num = self.num * other.den + other.num * self.den
                return QTScalar._make(num, self.den * other.den)
            b1 = self.den.exact_div(g)
            d1 = other.den.exact_div(g)
        num = self.num * d1 + other.num * b1
        if num.is_zero():
            return QTScalar.zero()
        h = self._gcd_or_one(num, g)
        if not h.is_one():
            num = num.exact_div(h)
            g = g.exact_div(h)
        return QTScalar._make(num, g * b1 * d1)

    __radd__ = __add__

    def __neg__(self):
        r = QTScalar.__new__(QTScalar)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return QTScalar.zero()
        g1 = self._gcd_or_one(self.num, other.den)
        g2 = self._gcd_or_one(other.num, self.den)
        n1 = self.num if g1.is_one() else self.num.exact_div(g1)
        d2 = other.den if g1.is_one() else other.den.exact_div(g1)
        n2 = other.num if g2.is_one() else other.num.exact_div(g2)
        d1 = self.den if g2.is_one() else self.den.exact_div(g2)
        return QTScalar._make(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division of QTScalar by zero")
        if self.is_zero():
            return QTScalar.zero()
        g1 = self._gcd_or_one(self.num, other.num)
        g2 = self._gcd_or_one(other.den, self.den)
        n1 = self.num if g1.is_one() else self.num.exact_div(g1)
        n2 = other.den if g2.is_one() else other.den.exact_div(g2)
        d1 = self.den if g2.is_one() else self.den.exact_div(g2)
        d2 = other.num if g1.is_one() else other.num.exact_div(g1)
        return QTScalar._make(n1 * n2, d1 * d2)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return QTScalar.one() / self ** (-n)
        result = QTScalar.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTScalar.from_rational(other)
        if not isinstance(other, QTScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        return not self == other

    @staticmethod
    def _coerce(x):
        if isinstance(x, QTScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return QTScalar.from_rational(x)
        raise TypeError(f"cannot coerce {type(x)!r} to QTScalar")

    # -- substitutions ------------------------------------------------------

    def adams(self, n):
        """q -> q^n, t -> t^n.  Coprimality is preserved by power substitution."""
        return QTScalar._make(self.num.adams(n), self.den.adams(n))

    def swap_qt(self):
        return QTScalar._make(self.num.swap_qt(), self.den.swap_qt())

    def subs_monomials(self, qa2, qb2, ta2, tb2):
        """Monomial substitution q -> q^(qa2/2) t^(qb2/2), t -> q^(ta2/2) t^(tb2/2)."""
        fa = lambda a, b: (a * qa2 + b * ta2) // 2
        fb = lambda a, b: (a * qb2 + b * tb2) // 2
        for (a, b) in list(self.num.terms) + list(self.den.terms):
            if (a * qa2 + b * ta2) % 2 or (a * qb2 + b * tb2) % 2:
                raise ValueError("substitution creates quarter-integer exponents")
        den = self.den.subs_exponents(fa, fb)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes after substitution")
        return QTScalar(self.num.subs_exponents(fa, fb), den)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"

    def __repr__(self):
        return f"QTScalar({self})"


# Module-level operation surface -------------------------------------------


def qt_add(a: QTScalar, b: QTScalar) -> QTScalar:
    return a + b


def qt_mul(a: QTScalar, b: QTScalar) -> QTScalar:
    return a * b


def qt_div(a: QTScalar, b: QTScalar) -> QTScalar:
    return a / b


def qt_is_polynomial(a: QTScalar):
    """(True, quotient) iff the denominator divides the numerator exactly.

    In canonical form this happens precisely when the denominator is 1; the
    quotient is then the numerator, a Laurent polynomial whose exponents may
    still be negative or half-integral -- check those separately via
    ``QTLaurent.has_nonnegative_exponents``.
    """
    if a.den.is_one():
        return True, a.num
    return False, None


def qt_substitute(a: QTScalar, q_val: QTScalar, t_val: QTScalar) -> QTScalar:
    """Evaluate a at q = q_val, t = t_val (values may be rational functions).

    Half-integral exponents require the substituted values to be monomials so
    that exact square roots exist.
    """
    q_val = QTScalar._coerce(q_val)
    t_val = QTScalar._coerce(t_val)
    integral = a.num.has_integral_exponents() and a.den.has_integral_exponents()
    if integral:
        qh = th = None
    else:
        qh, th = _monomial_sqrt(q_val), _monomial_sqrt(t_val)
        if qh is None or th is None:
            raise ValueError(
                "substitution of non-monomial values into half-integer exponents")

    def ev(p: QTLaurent) -> QTScalar:
        total = QTScalar.zero()
        for (da, db), c in p.terms.items():
            if integral:
                term = q_val ** (da // 2) * t_val ** (db // 2)
            else:
                term = qh ** da * th ** db
            total = total + term * QTScalar.from_rational(c)
        return total

    den = ev(a.den)
    if den.is_zero():
        raise ZeroDivisionError("denominator vanishes identically after substitution")
    return ev(a.num) / den


def _monomial_sqrt(v: QTScalar):
    """Square root of a monomial QTScalar (possibly with half exponents), or None."""
    if not (v.num.is_monomial() and v.den.is_monomial()):
        return None
    (na, nb), nc = v.num.leading()
    (da, db), dc = v.den.leading()
    a2, b2 = na - da, nb - db
    c = nc / dc
    if c.numerator < 0:
        return None
    from math import isqrt
    rn, rd = isqrt(c.numerator), isqrt(c.denominator)
    if rn * rn != c.numerator or rd * rd != c.denominator:
        return None
    # halved exponents of the root are (a2/2, b2/2) in doubled units
    if a2 % 2 or b2 % 2:
        return None
    return QTScalar.monomial(Fraction(rn, rd), a2 // 2, b2 // 2)


def one_minus_q_one_minus_t() -> QTScalar:
    """(1-q)(1-t) as a QTScalar."""
    one = QTScalar.one()
    return (one - QTScalar.q()) * (one - QTScalar.t())
