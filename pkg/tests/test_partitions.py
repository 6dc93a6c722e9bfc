"""Partition enumeration and cell statistics."""

import pytest

from charhilb.partitions import (
    Partition,
    cells_with_stats,
    conjugate,
    enumerate_partitions,
    n_stat,
    parse_partition,
)


def brute_count(n, maxpart=None):
    """Independent recursive partition counter."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return 1
    return sum(brute_count(n - p, p) for p in range(1, min(maxpart, n) + 1))


def test_enumerate_counts():
    assert enumerate_partitions(0) == [Partition()]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(8)) == brute_count(8) == 22


def test_enumerate_unique_and_valid():
    for n in range(9):
        parts = enumerate_partitions(n)
        assert len(set(parts)) == len(parts)
        for lam in parts:
            assert lam.size() == n


def test_conjugate_examples():
    assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
    assert conjugate(Partition((1, 1, 1))) == Partition((3,))


def test_conjugate_involution():
    for n in range(9):
        for lam in enumerate_partitions(n):
            assert conjugate(conjugate(lam)) == lam


def test_n_stat():
    assert n_stat(Partition((5,))) == 0
    assert n_stat(Partition((2, 1))) == 1
    # oracle: n(lambda) equals the sum of legs over all cells
    lam = Partition((1, 1, 1, 1))
    legs = sum(cs.leg for cs in cells_with_stats(lam))
    assert legs == 6
    assert n_stat(lam) == 6


def test_cells_with_stats_examples():
    lam = Partition((3, 2))
    stats = {cs.cell: (cs.arm, cs.leg) for cs in cells_with_stats(lam)}
    assert stats[(0, 0)] == (2, 1)
    lam1 = Partition((1,))
    assert cells_with_stats(lam1) == [type(cells_with_stats(lam1)[0])((0, 0), 0, 0)]
    lam22 = Partition((2, 2))
    arms = sum(cs.arm for cs in cells_with_stats(lam22))
    assert arms == n_stat(conjugate(lam22)) == 2


def test_arm_leg_sums():
    for n in range(11):
        for lam in enumerate_partitions(n):
            stats = cells_with_stats(lam)
            assert sum(cs.leg for cs in stats) == n_stat(lam)
            assert sum(cs.arm for cs in stats) == n_stat(conjugate(lam))


def test_arm_leg_conjugate_duality():
    for n in range(9):
        for lam in enumerate_partitions(n):
            mu = conjugate(lam)
            for i, j in lam.cells():
                assert lam.arm(i, j) == mu.leg(j, i)
                assert lam.leg(i, j) == mu.arm(j, i)


def test_parse_partition():
    assert parse_partition("3,1") == Partition((3, 1))
    assert parse_partition("") == Partition()
    with pytest.raises(ValueError):
        parse_partition("1,3")
    with pytest.raises(ValueError):
        parse_partition("a,b")


def test_repr():
    assert repr(Partition((3, 1))) == "(3,1)"
