from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from attainable import PreconditionError
from attainable.enumeration import partitions
from attainable.partitions import (
    Partition,
    cyclicity_index,
    extremal_long_partition,
    is_attainable,
    max_attainable_length,
    min_cyclicity_partition,
    part_bound,
    primary_addition,
    secondary_addition,
)

partitions_st = st.lists(st.integers(1, 40), min_size=1, max_size=12).map(Partition)


def test_constructor_canonicalizes():
    assert Partition([1, 3, 2]) == (3, 2, 1)
    assert Partition((3, 2, 1)).n == 6
    assert Partition((3, 2, 1)).length == 3
    assert Partition() == ()


@pytest.mark.parametrize("bad", [[0], [2, -1], [3, 0, 1]])
def test_constructor_rejects_nonpositive(bad):
    with pytest.raises(PreconditionError):
        Partition(bad)


@pytest.mark.parametrize(
    "lam, c",
    [
        ((7, 1, 1), 3),
        ((8, 1, 1), 4),
        ((7, 2, 1), 2),
        ((10, 2, 1, 1), 0),
        ((11, 1, 1, 1), 2),
        ((3, 2), 1),
        # coefficients 1, -1, -3; agrees with 1 - (n-1)^2
        ((1, 1, 1), -3),
    ],
)
def test_cyclicity_index_examples(lam, c):
    assert cyclicity_index(lam) == c


@pytest.mark.parametrize("n", range(1, 15))
def test_cyclicity_extremes(n):
    assert cyclicity_index((n,)) == n
    assert cyclicity_index((1,) * n) == 1 - (n - 1) ** 2


def test_cyclicity_index_is_exact_for_huge_parts():
    big = 10**40
    assert cyclicity_index((big, big, 1)) == big - big - 3


def test_empty_partition_rejected_by_core_ops():
    with pytest.raises(PreconditionError):
        cyclicity_index(())
    with pytest.raises(PreconditionError):
        primary_addition(())


def test_is_attainable():
    assert is_attainable((3, 2))
    assert not is_attainable((1, 1, 1))
    for m in range(1, 20):
        assert is_attainable((m, m))


def test_additions_examples():
    assert primary_addition((7, 1, 1)) == (8, 1, 1)
    assert primary_addition((1,)) == (2,)
    assert primary_addition((4, 4)) == (5, 4)
    assert secondary_addition((7, 1, 1)) == (7, 2, 1)
    assert secondary_addition((5, 4)) == (5, 5)


@pytest.mark.parametrize("lam", [(3, 3), (1,), (2, 2, 1)])
def test_secondary_addition_precondition(lam):
    with pytest.raises(PreconditionError):
        secondary_addition(lam)


@given(partitions_st)
def test_primary_addition_raises_index_by_one(lam):
    assert cyclicity_index(primary_addition(lam)) == cyclicity_index(lam) + 1


@given(partitions_st)
def test_secondary_addition_lowers_index_by_one(lam):
    if len(lam) >= 2 and lam[0] != lam[1]:
        assert cyclicity_index(secondary_addition(lam)) == cyclicity_index(lam) - 1


@given(partitions_st)
def test_parity_and_range(lam):
    n, c = lam.n, cyclicity_index(lam)
    assert (c - n) % 2 == 0
    assert 1 - (n - 1) ** 2 <= c <= n


@pytest.mark.parametrize("n, r", [(1, 1), (2, 2), (5, 2), (6, 3), (11, 3), (12, 4), (14, 4), (20, 5)])
def test_max_attainable_length(n, r):
    assert max_attainable_length(n) == r


def test_max_attainable_length_brute_force_definition():
    for n in range(1, 3000):
        r = max_attainable_length(n)
        assert r * (r - 1) <= n < (r + 1) * r
        assert isqrt(n) <= r <= isqrt(n) + 1


def test_max_attainable_length_exact_on_huge_inputs():
    for k in (10**20, 10**30 + 7):
        n = k * (k - 1)
        assert max_attainable_length(n) == k
        assert max_attainable_length(n - 1) == k - 1


def test_extremal_long_partition():
    assert extremal_long_partition(6) == (4, 1, 1)
    assert extremal_long_partition(14) == (11, 1, 1, 1)
    assert cyclicity_index(extremal_long_partition(14)) == 2
    assert extremal_long_partition(2) == (1, 1)
    assert cyclicity_index(extremal_long_partition(2)) == 0
    assert extremal_long_partition(1) == (1,)


def test_min_cyclicity_partition():
    assert min_cyclicity_partition(14) == (7, 7)
    assert min_cyclicity_partition(15) == (8, 7)
    assert min_cyclicity_partition(1) == (1,)
    for n in range(1, 22):
        best = min(cyclicity_index(lam) for lam in partitions(n) if is_attainable(lam))
        assert cyclicity_index(min_cyclicity_partition(n)) == best == n % 2


def test_part_bound():
    assert part_bound(12, 2) == 6
    assert part_bound(6, 3) == 1
    assert part_bound(1, 2) == Fraction(1, 2)
    with pytest.raises(PreconditionError):
        part_bound(5, 1)


def test_part_bound_is_tight_somewhere():
    # (m, m) attains n_2 = n/2 exactly
    for m in range(1, 10):
        assert Fraction((m, m)[1]) == part_bound(2 * m, 2)
