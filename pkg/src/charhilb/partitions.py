"""Young diagram combinatorics: partitions, conjugation, arm/leg statistics.

Conventions: English notation, rows listed top to bottom in weakly decreasing
order, cells indexed (row, column) from zero.  The arm of a cell counts cells
strictly to its right in the same row, the leg counts cells strictly below in
the same column, and n(lambda) = sum_i (i-1) * lambda_i with rows indexed
from 1.
"""

from __future__ import annotations

from dataclasses import dataclass


class Partition:
    """A partition stored as a tuple of weakly decreasing positive parts."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts

    def size(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def n_stat(self):
        return sum(i * p for i, p in enumerate(self.parts))

    def cells(self):
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def arm(self, i, j):
        return self.parts[i] - j - 1

    def leg(self, i, j):
        return sum(1 for r in range(i + 1, len(self.parts)) if self.parts[r] > j)

    def contains_cell(self, i, j):
        return 0 <= i < len(self.parts) and 0 <= j < self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        # descending lex among equal sizes puts (n) first, (1,...,1) last
        return (self.size(), tuple(-p for p in self.parts)) < \
               (other.size(), tuple(-p for p in other.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class CellStat:
    """A cell of a diagram together with its arm and leg counts."""
    cell: tuple
    arm: int
    leg: int


def enumerate_partitions(n: int):
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            result.append(Partition(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return result


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def n_stat(lam: Partition) -> int:
    return lam.n_stat()


def cells_with_stats(lam: Partition):
    """Every cell of the diagram with its arm and leg."""
    return [CellStat((i, j), lam.arm(i, j), lam.leg(i, j)) for i, j in lam.cells()]


def parse_partition(text: str) -> Partition:
    """Parse '3,1' or '' into a Partition."""
    text = text.strip()
    if not text or text == "0":
        return Partition()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    parts = tuple(p for p in parts if p != 0)
    return Partition(parts)
