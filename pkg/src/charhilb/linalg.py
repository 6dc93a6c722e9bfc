"""Exact linear algebra over Q, tuned for integer input rows.

Rows are dense lists.  Elimination is fraction-free on integer rows (scaled
cross-elimination with gcd normalization), so ranks and spans of the
polynomial coefficient vectors appearing in this package stay in fast integer
arithmetic; kernels are extracted with Fractions at the end.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _normalize_int_row(row):
    g = 0
    for c in row:
        g = gcd(g, c)
        if g == 1:
            return row
    if g > 1:
        return [c // g for c in row]
    return row


def clear_denominators(row):
    """Scale a Fraction row to a primitive integer row."""
    lcm = 1
    for c in row:
        d = c.denominator if isinstance(c, Fraction) else 1
        lcm = lcm * d // gcd(lcm, d)
    out = [int(c * lcm) if isinstance(c, Fraction) else c * lcm for c in row]
    return _normalize_int_row(out)


class IntRowSpace:
    """Incremental row space over Q with integer pivot rows.

    add(row) returns True when the row enlarges the span.  Rows may be lists
    of ints or Fractions (Fractions are cleared first).
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}  # pivot column -> integer row

    @property
    def rank(self):
        return len(self.pivots)

    def _reduce(self, row):
        for col in sorted(self.pivots):
            if row[col]:
                piv = self.pivots[col]
                a, b = piv[col], row[col]
                g = gcd(a, b)
                ma, mb = a // g, b // g
                row = [ma * r - mb * p for r, p in zip(row, piv)]
        return _normalize_int_row(row)

    def residual(self, row):
        if any(isinstance(c, Fraction) and c.denominator != 1 for c in row):
            row = clear_denominators(row)
        else:
            row = _normalize_int_row([int(c) for c in row])
        return self._reduce(row)

    def add(self, row):
        row = self.residual(row)
        for col, c in enumerate(row):
            if c:
                self.pivots[col] = row
                return True
        return False

    def contains(self, row):
        return not any(self.residual(row))


def kernel_basis(rows, ncols):
    """Basis of the right kernel of the matrix with the given rows.

    Rows are integer or Fraction lists of length ncols.  Returns a list of
    Fraction vectors spanning {v : M v = 0}.
    """
    space = IntRowSpace(ncols)
    for row in rows:
        space.add(row)
    # reduced echelon over Fractions
    echelon = []
    for col in sorted(space.pivots):
        row = [Fraction(c) for c in space.pivots[col]]
        echelon.append((col, row))
    # back-substitute to reduced form
    for idx in range(len(echelon) - 1, -1, -1):
        col, row = echelon[idx]
        lead = row[col]
        row = [c / lead for c in row]
        echelon[idx] = (col, row)
        for jdx in range(idx):
            c2, row2 = echelon[jdx]
            f = row2[col]
            if f:
                echelon[jdx] = (c2, [a - f * b for a, b in zip(row2, row)])
    pivot_cols = [col for col, _ in echelon]
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for col, row in echelon:
            v[col] = -row[fc]
        basis.append(v)
    return basis


def rank_of_rows(rows, ncols):
    space = IntRowSpace(ncols)
    for row in rows:
        space.add(row)
    return space.rank


def solve_in_span(basis_rows, target, ncols):
    """Coordinates of target in the span of basis_rows, or None.

    All vectors have length ncols; exact Fraction output.
    """
    # Gaussian elimination on the transpose system sum c_i b_i = target
    m = len(basis_rows)
    aug = [[Fraction(basis_rows[i][j]) for i in range(m)] + [Fraction(target[j])]
           for j in range(ncols)]
    piv_rows = []
    r = 0
    for c in range(m):
        p = next((j for j in range(r, ncols) if aug[j][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        lead = aug[r][c]
        aug[r] = [x / lead for x in aug[r]]
        for j in range(ncols):
            if j != r and aug[j][c]:
                f = aug[j][c]
                aug[j] = [x - f * y for x, y in zip(aug[j], aug[r])]
        piv_rows.append((r, c))
        r += 1
    coords = [Fraction(0)] * m
    for j in range(r, ncols):
        if aug[j][m]:
            return None
    for row, col in piv_rows:
        coords[col] = aug[row][m]
    return coords
