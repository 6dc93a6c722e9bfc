"""Sparse multivariate polynomials over Q with exact arithmetic.

Terms are stored as a dict from exponent tuples to nonzero Fractions.  The
number of variables is fixed per polynomial; callers assign meanings to the
variable slots (x_i/y_i pairs, trace coordinates, unipotent parameters, ...).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

_ZERO = Fraction(0)


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    self.terms[tuple(exp)] = Fraction(c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        c = Fraction(c)
        return cls(nvars, {(0,) * nvars: c} if c else None)

    @classmethod
    def variable(cls, nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, nvars, exp, c=1):
        return cls(nvars, {tuple(exp): Fraction(c)})

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, _ZERO) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = {exp: -c for exp, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, _ZERO) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return MPoly.zero(self.nvars)
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = {exp: v * c for exp, v in self.terms.items()}
        return r

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = MPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.nvars, other)
        return isinstance(other, MPoly) and self.nvars == other.nvars \
            and self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    # -- calculus ------------------------------------------------------------

    def diff(self, i):
        out = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e:
                nexp = exp[:i] + (e - 1,) + exp[i + 1:]
                s = out.get(nexp, _ZERO) + c * e
                if s:
                    out[nexp] = s
                else:
                    out.pop(nexp, None)
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    def diff_power(self, i, k):
        p = self
        for _ in range(k):
            p = p.diff(i)
            if p.is_zero():
                break
        return p

    # -- substitution and specialization --------------------------------------

    def permute_vars(self, perm):
        """perm maps old variable index to new variable index."""
        out = {}
        for exp, c in self.terms.items():
            nexp = [0] * self.nvars
            for i, e in enumerate(exp):
                nexp[perm[i]] = e
            out[tuple(nexp)] = c
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    def evaluate(self, values):
        """Full evaluation at Fractions."""
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for e, val in zip(exp, values):
                if e:
                    v *= val ** e
            total += v
        return total

    def eval_var(self, i, value):
        """Substitute a Fraction for variable i."""
        value = Fraction(value)
        out = {}
        for exp, c in self.terms.items():
            nexp = exp[:i] + (0,) + exp[i + 1:]
            s = out.get(nexp, _ZERO) + c * value ** exp[i]
            if s:
                out[nexp] = s
            else:
                out.pop(nexp, None)
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    def shift_var_expansion(self, i, j, max_order):
        """Write self with x_i replaced by x_j + e, as coefficients of e^m.

        Returns the list [c_0, ..., c_max_order] of MPoly coefficients of the
        expansion in powers of e up to max_order; higher orders are dropped.
        The returned polynomials do not involve variable i.
        """
        coeffs = [dict() for _ in range(max_order + 1)]
        for exp, c in self.terms.items():
            e = exp[i]
            base = exp[:i] + (0,) + exp[i + 1:]
            for m in range(0, min(e, max_order) + 1):
                nexp = list(base)
                nexp[j] += e - m
                key = tuple(nexp)
                d = coeffs[m]
                s = d.get(key, _ZERO) + c * comb(e, m)
                if s:
                    d[key] = s
                else:
                    d.pop(key, None)
        out = []
        for d in coeffs:
            r = MPoly.__new__(MPoly)
            r.nvars, r.terms = self.nvars, d
            out.append(r)
        return out

    # -- division ------------------------------------------------------------

    def divide_by_linear(self, i, j):
        """Exact division by (x_i - x_j); raises ArithmeticError if inexact.

        Uses the substitution x_i -> x_j + s: the result is divisible iff the
        s-constant term vanishes, and the quotient is read off the expansion.
        """
        # group terms by exponents away from variable i, tracking x_i powers
        # P = sum_m c_m(rest) * s^m after x_i = x_j + s
        bym = {}
        for exp, c in self.terms.items():
            e = exp[i]
            base = exp[:i] + (0,) + exp[i + 1:]
            for m in range(e + 1):
                nexp = list(base)
                nexp[j] += e - m
                key = (m, tuple(nexp))
                s = bym.get(key, _ZERO) + c * comb(e, m)
                if s:
                    bym[key] = s
                else:
                    bym.pop(key, None)
        out = {}
        for (m, base), c in bym.items():
            if m == 0:
                raise ArithmeticError("not divisible by the linear form")
            # s^(m-1) * base, then s -> x_i - x_j
            for r in range(m):
                nexp = list(base)
                nexp[i] += r
                nexp[j] += m - 1 - r
                key = tuple(nexp)
                coef = c * comb(m - 1, r) * (-1) ** (m - 1 - r)
                s = out.get(key, _ZERO) + coef
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    def divisible_by_linear(self, i, j):
        """True iff (x_i - x_j) divides self."""
        return self.eval_var_to_var(i, j).is_zero()

    def eval_var_to_var(self, i, j):
        """Substitute x_i -> x_j."""
        out = {}
        for exp, c in self.terms.items():
            nexp = list(exp)
            nexp[j] += nexp[i]
            nexp[i] = 0
            key = tuple(nexp)
            s = out.get(key, _ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    # -- inspection ----------------------------------------------------------

    def degree(self):
        return max((sum(exp) for exp in self.terms), default=-1)

    def degree_in(self, indices):
        return max((sum(exp[i] for i in indices) for exp in self.terms),
                   default=-1)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), _ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        names = [f"v{i}" for i in range(self.nvars)]
        parts = []
        for exp in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[exp]
            factors = [f"{names[i]}^{e}" if e > 1 else names[i]
                       for i, e in enumerate(exp) if e]
            body = "*".join(([str(abs(c))] if abs(c) != 1 or not factors else [])
                            + factors)
            parts.append(("+ " if c > 0 else "- ") + body if parts
                         else (body if c > 0 else "-" + body))
        return " ".join(parts)

    def __repr__(self):
        return f"MPoly({self})"
