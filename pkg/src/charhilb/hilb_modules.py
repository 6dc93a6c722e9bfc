"""Bigraded modules of (anti-)invariant polynomials with Vandermonde poles.

For n points with coordinates x_1..x_n, y_1..y_n and the diagonal action of
the symmetric group, the module M(n, k) consists of rational functions
f = h / Delta_x^k with h anti-invariant, subject to the integrality
conditions D(x, d/dy) f in R for every D in the span of k-fold products of
anti-invariants.  An equivalent presentation with invariant numerators and
pole order k-1 is available for k >= 1 as a cross-check.

Everything is exact:

* components are cut out by linear divisibility conditions, solved by
  intersecting kernels one operator block at a time in integer arithmetic;
* conditions are generated by k-fold products of the minimal anti-invariant
  generators (sufficient because {P : Delta^k | P(x, d/dy) h} is an ideal);
* divisibility by Delta_x^k reduces to (x_1 - x_2)^k by equivariance.

The module also hosts the shuffle product, primitive quotients with the
plethystic-logarithm comparison, the two-parameter family of operators
T_{r,s} realized by polynomial differential operators, and the spanning
check for power-sum-type generators on the primitive quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .linalg import IntRowSpace, clear_denominators, kernel_basis
from .partition_function import plog_twisted, twisted_coefficient
from .polynomials import MPoly
from .qt import QTLaurent, QTScalar, one_minus_q_one_minus_t, qt_is_polynomial

# ---------------------------------------------------------------------------
# ring helpers
# ---------------------------------------------------------------------------


class PolyRing2n:
    """Polynomials in x_1..x_n, y_1..y_n: x_i is variable i, y_i is n + i."""

    _cache = {}

    def __new__(cls, n):
        if n not in cls._cache:
            obj = super().__new__(cls)
            obj.n = n
            obj.nvars = 2 * n
            cls._cache[n] = obj
        return cls._cache[n]

    def x(self, i):
        return MPoly.variable(self.nvars, i)

    def y(self, i):
        return MPoly.variable(self.nvars, self.n + i)

    def constant(self, c):
        return MPoly.constant(self.nvars, c)

    def vandermonde(self):
        v = self.constant(1)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                v = v * (self.x(i) - self.x(j))
        return v

    def perm_array(self, sigma):
        """MPoly.permute_vars array for the diagonal action of sigma."""
        perm = [0] * self.nvars
        for i in range(self.n):
            perm[i] = sigma[i]
            perm[self.n + i] = self.n + sigma[i]
        return perm

    def act(self, sigma, f):
        return f.permute_vars(self.perm_array(sigma))

    def bidegree(self, f):
        """(x-degree, y-degree); requires bihomogeneous input."""
        degs = {(sum(e[:self.n]), sum(e[self.n:])) for e in f.terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not bihomogeneous")
        return degs.pop() if degs else (0, 0)


def _sign(sigma):
    inv = 0
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                inv += 1
    return -1 if inv % 2 else 1, inv


def symmetrize(ring: PolyRing2n, f: MPoly, sign: bool) -> MPoly:
    """Sum of (+-1)^sigma sigma(f) over the diagonal symmetric group action."""
    total = MPoly.zero(ring.nvars)
    for sigma in itertools.permutations(range(ring.n)):
        s, _ = _sign(sigma)
        g = ring.act(sigma, f)
        total = total + (g if (s == 1 or not sign) else -g)
    return total


# -- orbit bases -------------------------------------------------------------


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _orbit_reps(n, dx, dy, antisymmetric):
    """Canonical multisets of per-point exponent pairs (a_i, b_i)."""
    reps = []

    def rec(i, rx, ry, prev, acc):
        if i == n:
            if rx == 0 and ry == 0:
                reps.append(tuple(acc))
            return
        for a in range(min(rx, prev[0]) if prev else rx, -1, -1):
            bcap = ry
            if prev and a == prev[0]:
                bcap = min(ry, prev[1])
            for b in range(bcap, -1, -1):
                if antisymmetric and prev and (a, b) == prev:
                    continue
                acc.append((a, b))
                rec(i + 1, rx - a, ry - b, (a, b), acc)
                acc.pop()

    rec(0, dx, dy, None, [])
    return reps


def orbit_basis(n, dx, dy, antisymmetric):
    """Basis of the (anti-)invariant bidegree component as orbit sums.

    Returns a list of MPoly with integer coefficients (+-1 per monomial).
    """
    if dx < 0 or dy < 0:
        return []
    ring = PolyRing2n(n)
    out = []
    for rep in _orbit_reps(n, dx, dy, antisymmetric):
        terms = {}
        seen = set()
        for sigma in itertools.permutations(range(n)):
            arranged = tuple(rep[sigma[i]] for i in range(n))
            if arranged in seen:
                continue
            seen.add(arranged)
            if antisymmetric:
                s, _ = _sign(tuple(sigma))
                # parity of the arrangement relative to the canonical order
                coeff = s
            else:
                coeff = 1
            exp = tuple(p[0] for p in arranged) + tuple(p[1] for p in arranged)
            terms[exp] = coeff
        out.append(MPoly(ring.nvars, {e: Fraction(c) for e, c in terms.items()}))
    return out


def molien_series(n, sign, capx, capy):
    """Bigraded dimensions of (anti-)invariants via the Molien sum.

    dim(a, b) = (1/n!) sum_sigma (+-1)^sigma prod_cycles 1/((1-q^c)(1-t^c)).
    """
    cycle_types = {}
    for sigma in itertools.permutations(range(n)):
        seen = [False] * n
        cycles = []
        for i in range(n):
            if not seen[i]:
                c, j = 0, i
                while not seen[j]:
                    seen[j] = True
                    j = sigma[j]
                    c += 1
                cycles.append(c)
        key = tuple(sorted(cycles))
        cycle_types[key] = cycle_types.get(key, 0) + 1
    out = {}
    for (a, b) in itertools.product(range(capx + 1), range(capy + 1)):
        total = Fraction(0)
        for cycles, count in cycle_types.items():
            sgn = (-1) ** (n - len(cycles)) if sign else 1
            na = _count_weighted(a, cycles)
            nb = _count_weighted(b, cycles)
            total += Fraction(count * sgn * na * nb, factorial(n))
        assert total.denominator == 1
        out[(a, b)] = int(total)
    return out


def _count_weighted(total, weights):
    """Number of ways to write total = sum w_i m_i with m_i >= 0."""
    dp = [0] * (total + 1)
    dp[0] = 1
    for w in weights:
        for v in range(w, total + 1):
            dp[v] += dp[v - w]
    return dp[total]


# ---------------------------------------------------------------------------
# generators of anti-invariants and their powers
# ---------------------------------------------------------------------------

_GEN_CACHE = {}


def antiinvariant_generators(n):
    """Minimal generators of the anti-invariants over the invariants.

    Computed degreewise by graded Nakayama within the bidegree box
    (n(n-1)/2, n(n-1)/2), which contains all minimal generators (top degrees
    are the two Vandermonde determinants).
    """
    if n in _GEN_CACHE:
        return _GEN_CACHE[n]
    ring = PolyRing2n(n)
    box = n * (n - 1) // 2
    gens = []
    if n == 1:
        gens = [((0, 0), ring.constant(1))]
    else:
        for a, b in sorted(itertools.product(range(box + 1), repeat=2),
                           key=lambda ab: (ab[0] + ab[1], ab)):
            amb = orbit_basis(n, a, b, True)
            if not amb:
                continue
            cols = sorted({e for p in amb for e in p.terms})
            colidx = {e: i for i, e in enumerate(cols)}
            space = IntRowSpace(len(cols))
            for (ga, gb), g in gens:
                if ga > a or gb > b or (ga, gb) == (a, b):
                    continue
                for inv in orbit_basis(n, a - ga, b - gb, False):
                    prod = inv * g
                    row = [0] * len(cols)
                    for e, c in prod.terms.items():
                        row[colidx[e]] = int(c)
                    space.add(row)
            for cand in amb:
                row = [0] * len(cols)
                for e, c in cand.terms.items():
                    row[colidx[e]] = int(c)
                if space.add(row):
                    gens.append(((a, b), cand))
    _GEN_CACHE[n] = gens
    return gens


_POWER_GEN_CACHE = {}


def condition_generators(n, k):
    """Products of k minimal anti-invariant generators.

    These generate the span of k-fold products of anti-invariants as a module
    over the invariants, hence suffice for the integrality conditions (the
    conditions cut out an ideal).  Not reduced to a minimal set.
    """
    if (n, k) in _POWER_GEN_CACHE:
        return _POWER_GEN_CACHE[(n, k)]
    ring = PolyRing2n(n)
    if k == 0:
        result = [((0, 0), ring.constant(1))]
    else:
        gens = antiinvariant_generators(n)
        result = []
        seen = set()
        for combo in itertools.combinations_with_replacement(range(len(gens)), k):
            if combo in seen:
                continue
            seen.add(combo)
            bid = (sum(gens[i][0][0] for i in combo),
                   sum(gens[i][0][1] for i in combo))
            poly = ring.constant(1)
            for i in combo:
                poly = poly * gens[i][1]
            result.append((bid, poly))
        result.sort(key=lambda t: (t[0][1], t[0][0]))
    _POWER_GEN_CACHE[(n, k)] = result
    return result


def antiinvariant_power_basis(n, k, capx, capy):
    """Bases and minimal generators of the span of k-fold products.

    Returns dict bidegree -> (component_dimension, minimal_generators) where
    minimal_generators is the list of new module generators at that bidegree,
    obtained by quotienting out products with positive-degree invariant
    coefficients.
    """
    products = [pg for pg in condition_generators(n, k)
                if pg[0][0] <= capx and pg[0][1] <= capy]
    out = {}
    mingens = []
    for a, b in sorted(itertools.product(range(capx + 1), range(capy + 1)),
                       key=lambda ab: (ab[0] + ab[1], ab)):
        cands = [g for (ga, gb), g in products if (ga, gb) == (a, b)]
        below = []
        for (ga, gb), g in mingens:
            if ga <= a and gb <= b and (ga, gb) != (a, b):
                for inv in orbit_basis(n, a - ga, b - gb, False):
                    below.append(inv * g)
        support = set()
        for p in below + cands:
            support.update(p.terms)
        cols = sorted(support)
        if not cols:
            continue
        colidx = {e: i for i, e in enumerate(cols)}
        dim_space = IntRowSpace(len(cols))
        new_gens = []
        for p in below:
            row = [0] * len(cols)
            for e, c in p.terms.items():
                row[colidx[e]] = int(c)
            dim_space.add(row)
        for cand in cands:
            row = [0] * len(cols)
            for e, c in cand.terms.items():
                row[colidx[e]] = int(c)
            if dim_space.add(row):
                new_gens.append(cand)
        if dim_space.rank or new_gens:
            out[(a, b)] = (dim_space.rank, new_gens)
        mingens.extend([((a, b), g) for g in new_gens])
    return out


# ---------------------------------------------------------------------------
# Laurent poles and module components
# ---------------------------------------------------------------------------


@dataclass
class LaurentPole:
    """numerator / Delta_x^pole, canonicalized so Delta does not divide the
    numerator when the pole order is positive."""
    n: int
    num: MPoly
    pole: int

    def __post_init__(self):
        self.canonicalize()

    def canonicalize(self):
        if self.num.is_zero():
            self.pole = 0
            return self
        while self.pole > 0 and self._delta_divides():
            self.num = self._delta_quotient()
            self.pole -= 1
        return self

    def _delta_divides(self):
        p = self.num
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if not p.eval_var_to_var(i, j).is_zero():
                    return False
                p = p.divide_by_linear(i, j)
        return True

    def _delta_quotient(self):
        p = self.num
        for i in range(self.n):
            for j in range(i + 1, self.n):
                p = p.divide_by_linear(i, j)
        return p

    def bidegree(self):
        ring = PolyRing2n(self.n)
        dx, dy = ring.bidegree(self.num)
        return (dx - self.pole * self.n * (self.n - 1) // 2, dy)

    def at_pole(self, k):
        """Numerator when written over Delta^k; requires k >= pole."""
        if k < self.pole:
            raise ValueError("cannot lower the pole order")
        num = self.num
        ring = PolyRing2n(self.n)
        delta = ring.vandermonde()
        for _ in range(k - self.pole):
            num = num * delta
        return num

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("point count mismatch")
        p = max(self.pole, other.pole)
        return LaurentPole(self.n, self.at_pole(p) + other.at_pole(p), p)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return LaurentPole(self.n, self.num.scale(c), self.pole)

    def __eq__(self, other):
        return isinstance(other, LaurentPole) and self.n == other.n \
            and self.pole == other.pole and self.num == other.num

    def __repr__(self):
        if self.pole:
            return f"({self.num})/Delta^{self.pole}"
        return f"{self.num}"


@dataclass
class BigradedSpace:
    bidegree: tuple
    basis: list
    context: tuple  # (n, k)

    @property
    def dim(self):
        return len(self.basis)


def _apply_xdy(n, D: MPoly, h: MPoly):
    """Integer-term dict of D(x_1..x_n, d/dy_1..d/dy_n) applied to h."""
    out = {}
    for dexp, dc in D.terms.items():
        a = dexp[:n]
        b = dexp[n:]
        for hexp, hc in h.terms.items():
            coef = dc * hc
            ny = list(hexp[n:])
            ok = True
            for i, bi in enumerate(b):
                if bi:
                    yi = ny[i]
                    if yi < bi:
                        ok = False
                        break
                    f = 1
                    for s in range(bi):
                        f *= yi - s
                    coef *= f
                    ny[i] = yi - bi
            if not ok or not coef:
                continue
            key = tuple(x + ai for x, ai in zip(hexp[:n], a)) + tuple(ny)
            v = out.get(key, 0) + coef
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _eps_profiles(terms, order_cap):
    """Coefficients of eps^m (m < order_cap) after x_2 -> x_1 + eps.

    Input and output are dicts from exponent tuples to integers; variable 1
    is eliminated (its exponent becomes 0 in the output keys).
    """
    out = [dict() for _ in range(order_cap)]
    for exp, c in terms.items():
        e = exp[1]
        base = list(exp)
        base[1] = 0
        for m in range(min(e, order_cap - 1) + 1):
            nexp = list(base)
            nexp[0] += e - m
            key = tuple(nexp)
            d = out[m]
            v = d.get(key, 0) + c * comb(e, m)
            if v:
                d[key] = v
            else:
                d.pop(key, None)
    return out


def _component_kernel(n, numerator_bidegree, antisymmetric, gens, divis_order):
    """Basis (as integer coefficient vectors over the orbit basis) of the
    numerators h satisfying Delta^divis_order | D(x, d/dy) h for all gens."""
    dxh, dy = numerator_bidegree
    basis = orbit_basis(n, dxh, dy, antisymmetric)
    if not basis:
        return [], basis
    dim = len(basis)
    K = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    if n == 1 or divis_order == 0:
        return K, basis
    hdicts = [{e: int(c) for e, c in h.terms.items()} for h in basis]
    for (gb, D) in gens:
        if not K:
            break
        if gb[1] > dy:
            continue  # the operator kills the whole component
        profiles = []
        for hd in hdicts:
            W = _apply_xdy(n, D, MPoly(2 * n, {e: Fraction(c)
                                               for e, c in hd.items()}))
            profiles.append(_eps_profiles(W, divis_order))
        rows = []
        for m in range(divis_order):
            support = {}
            combos = []
            for v in K:
                Q = {}
                for j, vj in enumerate(v):
                    if vj:
                        for e, c in profiles[j][m].items():
                            val = Q.get(e, 0) + vj * c
                            if val:
                                Q[e] = val
                            else:
                                Q.pop(e, None)
                combos.append(Q)
                support.update(Q)
            for e in support:
                rows.append([Q.get(e, 0) for Q in combos])
        if not rows:
            continue
        small_kernel = kernel_basis(rows, len(K))
        if len(small_kernel) == len(K):
            continue
        newK = []
        for w in small_kernel:
            w = clear_denominators(w)
            vec = [0] * dim
            for idx, wi in enumerate(w):
                if wi:
                    for j in range(dim):
                        vec[j] += wi * K[idx][j]
            newK.append(vec)
        K = newK
    return K, basis


_COMPONENT_CACHE = {}


def module_component(n, k, bidegree, presentation="anti") -> BigradedSpace:
    """Basis of the bidegree component of M(n, k).

    presentation 'anti': f = h / Delta^k with h anti-invariant and
    Delta^k | D(x, d/dy) h for all D in the k-fold products; presentation
    'inv' (k >= 1): f = p / Delta^(k-1) with p invariant and conditions over
    (k-1)-fold products.  Both give the same space; 'inv' is the cross-check.
    """
    d_x, d_y = bidegree
    key = (n, k, d_x, d_y, presentation)
    if key in _COMPONENT_CACHE:
        return _COMPONENT_CACHE[key]
    offset = n * (n - 1) // 2
    if presentation == "anti":
        pole, power = k, k
        antisymmetric = n > 1
    elif presentation == "inv":
        if k < 1:
            raise ValueError("'inv' presentation needs k >= 1")
        pole, power = k - 1, k - 1
        antisymmetric = False
    else:
        raise ValueError(f"unknown presentation {presentation!r}")
    dxh = d_x + pole * offset
    if dxh < 0 or d_y < 0:
        space = BigradedSpace(bidegree, [], (n, k))
        _COMPONENT_CACHE[key] = space
        return space
    gens = condition_generators(n, power)
    K, basis = _component_kernel(n, (dxh, d_y), antisymmetric, gens, pole)
    elements = []
    for vec in K:
        num = MPoly.zero(2 * n)
        for j, c in enumerate(vec):
            if c:
                num = num + basis[j].scale(c)
        elements.append(LaurentPole(n, num, pole))
    space = BigradedSpace(bidegree, elements, (n, k))
    _COMPONENT_CACHE[key] = space
    return space


def membership_check(n, k, f: LaurentPole) -> bool:
    """Exact test of the defining conditions of M(n, k) on one element."""
    if f.is_zero():
        return True
    if f.pole > k:
        return False
    h = f.at_pole(k)
    ring = PolyRing2n(n)
    # numerator must be anti-invariant
    for i in range(n - 1):
        sigma = list(range(n))
        sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
        if ring.act(tuple(sigma), h) != -h:
            return False
    if n == 1 or k == 0:
        return True
    _, dy = ring.bidegree(h)
    for (gb, D) in condition_generators(n, k):
        if gb[1] > dy:
            continue
        W = _apply_xdy(n, D, h)
        for prof in _eps_profiles(W, k):
            if prof:
                return False
    return True


def hilbert_series(n, k, capx=6, capy=6, presentation="anti"):
    """dict (d_x, d_y) -> dimension over the window
    d_x + k n(n-1)/2 <= capx, 0 <= d_y <= capy."""
    offset = k * n * (n - 1) // 2
    out = {}
    for dxh in range(capx + 1):
        for dy in range(capy + 1):
            bid = (dxh - offset, dy)
            out[bid] = module_component(n, k, bid, presentation).dim
    return out


# ---------------------------------------------------------------------------
# shuffle product and primitive quotient
# ---------------------------------------------------------------------------


def _coset_reps(n1, n2):
    """Minimal-length representatives of S_(n1+n2) / (S_n1 x S_n2).

    Each is returned as (sigma, length) with sigma the image tuple; sigma is
    increasing on the first n1 positions and on the last n2.
    """
    n = n1 + n2
    reps = []
    for S in itertools.combinations(range(n), n1):
        comp = [i for i in range(n) if i not in S]
        sigma = tuple(list(S) + comp)
        _, length = _sign(sigma)
        reps.append((sigma, length))
    return reps


def _embed(num: MPoly, n_small, n_big, offset):
    """Send x_i, y_i (i < n_small) to x_(i+offset), y_(i+offset)."""
    out = {}
    for exp, c in num.terms.items():
        nexp = [0] * (2 * n_big)
        for i in range(n_small):
            nexp[i + offset] = exp[i]
            nexp[n_big + i + offset] = exp[n_small + i]
        out[tuple(nexp)] = c
    return MPoly(2 * n_big, out)


def shuffle(f: LaurentPole, g: LaurentPole, k: int) -> LaurentPole:
    """Signed shuffle product M(n1,k) x M(n2,k) -> M(n1+n2,k).

    Sum over minimal-length coset representatives sigma of
    (-1)^((k-1) len(sigma)) sigma(f g); at the level of numerators over
    Delta^k the total sign per coset is just the permutation sign.
    """
    n1, n2 = f.n, g.n
    n = n1 + n2
    ring = PolyRing2n(n)
    hf = _embed(f.at_pole(k), n1, n, 0)
    hg = _embed(g.at_pole(k), n2, n, n1)
    cross = ring.constant(1)
    for i in range(n1):
        for j in range(n1, n):
            cross = cross * (ring.x(i) - ring.x(j))
    h0 = hf * hg * cross ** k
    total = MPoly.zero(2 * n)
    for sigma, length in _coset_reps(n1, n2):
        term = ring.act(sigma, h0)
        total = total + (term if length % 2 == 0 else -term)
    return LaurentPole(n, total, k)


def _component_rows(space: BigradedSpace, k):
    """Numerators at pole order k as integer dicts, for rank computations."""
    rows = []
    for el in space.basis:
        num = el.at_pole(k)
        rows.append({e: c for e, c in num.terms.items()})
    return rows


def _rows_to_space(dict_rows):
    support = sorted({e for r in dict_rows for e in r})
    colidx = {e: i for i, e in enumerate(support)}
    space = IntRowSpace(len(support))
    dense = []
    for r in dict_rows:
        row = [Fraction(0)] * len(support)
        for e, c in r.items():
            row[colidx[e]] = c
        dense.append(row)
    return space, dense, colidx


def _shuffle_row_dicts(n, k, bidegree):
    """Numerator dicts of all shuffle products landing in the bidegree."""
    d_x, d_y = bidegree
    rows = []
    for n1 in range(1, n):
        n2 = n - n1
        lo1 = -k * n1 * (n1 - 1) // 2
        hi1 = d_x + k * n2 * (n2 - 1) // 2
        for ex in range(lo1, hi1 + 1):
            for ey in range(0, d_y + 1):
                space1 = module_component(n1, k, (ex, ey))
                if not space1.dim:
                    continue
                space2 = module_component(n2, k, (d_x - ex, d_y - ey))
                if not space2.dim:
                    continue
                for a in space1.basis:
                    for b in space2.basis:
                        sh = shuffle(a, b, k)
                        if not sh.is_zero():
                            rows.append({e: c for e, c
                                         in sh.at_pole(k).terms.items()})
    return rows


def primitive_quotient(n, k, capx=6, capy=6):
    """dict (d_x, d_y) -> (dim M, dim of the primitive quotient).

    The shuffle span is accumulated from all splittings n = n1 + n2; every
    shuffle is checked to land inside the component (membership), which makes
    the quotient dimension dim M - rank(shuffles).
    """
    offset = k * n * (n - 1) // 2
    out = {}
    for dxh in range(capx + 1):
        for dy in range(capy + 1):
            bid = (dxh - offset, dy)
            comp = module_component(n, k, bid)
            if n == 1:
                out[bid] = (comp.dim, comp.dim)
                continue
            sh_rows = _shuffle_row_dicts(n, k, bid)
            if not sh_rows:
                out[bid] = (comp.dim, comp.dim)
                continue
            space, dense, _ = _rows_to_space(
                _component_rows(comp, k) + sh_rows)
            for row in dense[:comp.dim]:
                space.add(row)
            base_rank = space.rank
            assert base_rank == comp.dim
            shuffle_space, sh_dense, _ = _rows_to_space(sh_rows)
            for row in sh_dense:
                shuffle_space.add(row)
            for row in dense[comp.dim:]:
                if space.add(row):
                    raise ArithmeticError(
                        f"shuffle product escaped the module at {bid}")
            out[bid] = (comp.dim, comp.dim - shuffle_space.rank)
    return out


@dataclass
class PrimitiveComparison:
    """Comparison of the primitive Hilbert series with the plethystic-log
    prediction, after q -> 1/q and a lowest-term monomial shift."""
    n: int
    k: int
    matched: bool
    shift: tuple
    lhs: dict
    rhs: dict
    dims: dict
    notes: list = field(default_factory=list)


def primitive_vs_plog(n, k, capx=6, capy=6) -> PrimitiveComparison:
    """Check that (1-q)(1-t) * (primitive Hilbert series of M(n,k)) matches
    the z^n coefficient of -(1-q)(1-t) pLog Omega_k under q -> 1/q, up to a
    monomial shift fixed by the lowest terms.

    The prediction is normalized by the sign (-1)^((k+1) n), which makes the
    n = 1 case an exact match; dimensions are counted within the caps and the
    product by (1-q)(1-t) is only evaluated where the window makes it exact.
    """
    dims = primitive_quotient(n, k, capx, capy)
    offset = k * n * (n - 1) // 2
    xhi = capx - offset
    prim = {bid: pd for bid, (d, pd) in dims.items()}
    lhs = {}
    for a in range(-offset, xhi + 1):
        for b in range(0, capy + 1):
            val = prim.get((a, b), 0) - prim.get((a - 1, b), 0) \
                - prim.get((a, b - 1), 0) + prim.get((a - 1, b - 1), 0)
            if val:
                lhs[(a, b)] = val
    target = -one_minus_q_one_minus_t() * twisted_coefficient(
        plog_twisted(k, n), n)
    poly, laurent = qt_is_polynomial(target)
    notes = []
    if not poly:
        return PrimitiveComparison(n, k, False, (0, 0), lhs, {}, dims,
                                   ["plethystic-log coefficient not polynomial"])
    sign = -1 if ((k + 1) * n) % 2 else 1
    rhs = {}
    for (da, db), c in laurent.terms.items():
        if da % 2 or db % 2:
            return PrimitiveComparison(n, k, False, (0, 0), lhs, {}, dims,
                                       ["half-integer exponents in target"])
        assert c.denominator == 1
        rhs[(-da // 2, db // 2)] = sign * int(c)
    if not lhs and not rhs:
        return PrimitiveComparison(n, k, True, (0, 0), lhs, rhs, dims)
    if not lhs or not rhs:
        return PrimitiveComparison(n, k, False, (0, 0), lhs, rhs, dims,
                                   ["one side is identically zero"])
    lo_l = min(lhs, key=lambda e: (e[0] + e[1], e))
    lo_r = min(rhs, key=lambda e: (e[0] + e[1], e))
    shift = (lo_l[0] - lo_r[0], lo_l[1] - lo_r[1])
    shifted = {(a + shift[0], b + shift[1]): c for (a, b), c in rhs.items()}
    matched = True
    for (a, b), c in shifted.items():
        if a > xhi or b > capy:
            notes.append(f"target term q^{a} t^{b} outside the window")
            continue
        if lhs.get((a, b), 0) != c:
            matched = False
    for (a, b), c in lhs.items():
        if shifted.get((a, b), 0) != c:
            matched = False
    return PrimitiveComparison(n, k, matched, shift, lhs, shifted, dims, notes)


# ---------------------------------------------------------------------------
# operators T_{r,s}
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CohaOperator:
    """T_{r,s} tensored with either the point class or the unit class.

    flavor 'pt': sum_i x_i^s (d/dy_i)^r.
    flavor 'one': sum_i (-s x_i^(s-1) (d/dy_i)^r y_i - r x_i^s (d/dy_i)^(r-1)
    d/dx_i), where terms with scalar factor 0 are dropped before any negative
    exponent can form (so T_{0,0} (x) one = 0).
    """
    r: int
    s: int
    flavor: str

    def __post_init__(self):
        if self.flavor not in ("pt", "one"):
            raise ValueError("flavor must be 'pt' or 'one'")
        if self.r < 0 or self.s < 0:
            raise ValueError("indices must be nonnegative")


def _lp_diff_x(f: LaurentPole, i) -> LaurentPole:
    """Partial derivative in x_i by the quotient rule."""
    ring = PolyRing2n(f.n)
    if f.pole == 0:
        return LaurentPole(f.n, f.num.diff(i), 0)
    delta = ring.vandermonde()
    num = f.num.diff(i) * delta - f.num.scale(f.pole) * delta.diff(i)
    return LaurentPole(f.n, num, f.pole + 1)


def coha_apply(op: CohaOperator, f: LaurentPole) -> LaurentPole:
    n = f.n
    ring = PolyRing2n(n)
    if op.flavor == "pt":
        # d/dy commutes with the poles
        num = MPoly.zero(2 * n)
        for i in range(n):
            num = num + (ring.x(i) ** op.s) * f.num.diff_power(n + i, op.r)
        return LaurentPole(n, num, f.pole)
    total = LaurentPole(n, MPoly.zero(2 * n), 0)
    for i in range(n):
        if op.s:
            g = f.num * ring.y(i)
            g = g.diff_power(n + i, op.r)
            g = (ring.x(i) ** (op.s - 1)) * g.scale(-op.s)
            total = total + LaurentPole(n, g, f.pole)
        if op.r:
            d = _lp_diff_x(f, i)
            num = (ring.x(i) ** op.s) * d.num.diff_power(n + i, op.r - 1)
            total = total + LaurentPole(n, num.scale(-op.r), d.pole)
    return total


def _cup(f1, f2):
    """Product on the two-class cohomology of the projective line."""
    if f1 == "pt" and f2 == "pt":
        return None  # pt cup pt = 0
    if f1 == "one" and f2 == "one":
        return "one"
    return "pt"


def coha_bracket_check(n, k, cap=3, max_tests=None):
    """Verify [T_a (x) f1, T_b (x) f2] = (r's - rs') T_{a+b-1} (x) f1 cup f2
    on basis elements of small components of M(n, k).

    Returns a report dict with 'violations' (empty on success) and counters.
    """
    tests = []
    offset = k * n * (n - 1) // 2
    for dxh in range(3):
        for dy in range(3):
            comp = module_component(n, k, (dxh - offset, dy))
            tests.extend(comp.basis)
    if max_tests:
        tests = tests[:max_tests]
    pairs = [(r, s) for r in range(cap + 1) for s in range(cap + 1)
             if r + s <= cap]
    violations = []
    checked = 0
    for (r, s), (r2, s2) in itertools.product(pairs, repeat=2):
        for fl1, fl2 in itertools.product(("pt", "one"), repeat=2):
            A = CohaOperator(r, s, fl1)
            B = CohaOperator(r2, s2, fl2)
            coeff = r2 * s - r * s2
            target_flavor = _cup(fl1, fl2)
            for f in tests:
                lhs = coha_apply(A, coha_apply(B, f)) \
                    - coha_apply(B, coha_apply(A, f))
                if coeff == 0 or target_flavor is None:
                    rhs = LaurentPole(n, MPoly.zero(2 * n), 0)
                else:
                    T = CohaOperator(r + r2 - 1, s + s2 - 1, target_flavor)
                    rhs = coha_apply(T, f).scale(coeff)
                checked += 1
                if lhs != rhs:
                    violations.append({
                        "a": (r, s, fl1), "b": (r2, s2, fl2),
                        "element": repr(f),
                    })
    return {"n": n, "k": k, "cap": cap, "checked": checked,
            "test_elements": len(tests), "violations": violations}


# ---------------------------------------------------------------------------
# spanning check for the power-sum generators
# ---------------------------------------------------------------------------


def _psi_products(n, xdeg, ydeg):
    """All products of psi_s(pt) = sum x_i^s and psi_s(one) = s sum x_i^(s-1) y_i
    with total bidegree (xdeg, ydeg)."""
    ring = PolyRing2n(n)
    pt_gens = {}
    one_gens = {}
    for s in range(1, xdeg + 2):
        p = MPoly.zero(2 * n)
        u = MPoly.zero(2 * n)
        for i in range(n):
            p = p + ring.x(i) ** s
            u = u + (ring.x(i) ** (s - 1)) * ring.y(i)
        pt_gens[s] = p
        one_gens[s] = u.scale(s)
    results = []

    def rec(poly, rx, ry, min_s_one, min_s_pt):
        if ry == 0 and rx == 0:
            results.append(poly)
            return
        if ry > 0:
            for s in range(min_s_one, rx + 2):
                rec(poly * one_gens[s], rx - (s - 1), ry - 1, s, 1)
        elif rx > 0:
            for s in range(min_s_pt, rx + 1):
                rec(poly * pt_gens[s], rx - s, 0, min_s_one, s)

    rec(ring.constant(1), xdeg, ydeg, 1, 1)
    return results


def generators_span_check(n, k, capx=6, capy=6):
    """Check whether products of 1/Delta^(k-1) with power-sum generators span
    the primitive quotient in each bidegree.

    Candidates failing the module membership conditions are excluded and
    counted.  Returns a per-bidegree report.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    offset = k * n * (n - 1) // 2
    shift = (k - 1) * n * (n - 1) // 2
    report = {}
    for dxh in range(capx + 1):
        for dy in range(capy + 1):
            bid = (dxh - offset, dy)
            comp = module_component(n, k, bid)
            if comp.dim == 0:
                report[bid] = {"dim": 0, "spanned": True, "psi_members": 0,
                               "psi_rejected": 0}
                continue
            xnum = bid[0] + shift
            members = []
            rejected = 0
            if xnum >= 0:
                for poly in _psi_products(n, xnum, dy):
                    cand = LaurentPole(n, poly, k - 1)
                    if membership_check(n, k, cand):
                        members.append(cand)
                    else:
                        rejected += 1
            rows = _shuffle_row_dicts(n, k, bid) if n > 1 else []
            rows += [{e: c for e, c in m.at_pole(k).terms.items()}
                     for m in members]
            if rows:
                space, dense, _ = _rows_to_space(rows)
                for row in dense:
                    space.add(row)
                rank = space.rank
            else:
                rank = 0
            report[bid] = {"dim": comp.dim, "spanned": rank == comp.dim,
                           "psi_members": len(members),
                           "psi_rejected": rejected,
                           "span_rank": rank}
    return report
