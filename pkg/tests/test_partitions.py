import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from configserre.partitions import (
    SetPartition,
    all_set_partitions,
    bell_partial,
    class_size,
    count_by_block_sizes,
    descending_identity,
    falling_factorial_coeffs,
    multiplicities,
    partitions_of,
    refines,
    set_partitions,
    stirling_first,
    stirling_first_by_cycles,
    stirling_matrices,
    stirling_second,
    z_lambda,
)

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
BELL_NUMBERS = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(13)] == PARTITION_NUMBERS


def test_partitions_are_sorted_and_distinct():
    for n in range(1, 10):
        ps = partitions_of(n)
        assert len(set(ps)) == len(ps)
        assert all(sum(p) == n and list(p) == sorted(p, reverse=True) for p in ps)


@pytest.mark.parametrize("n", range(1, 9))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(mu) for mu in partitions_of(n)) == math.factorial(n)
    assert sum(Fraction(1, z_lambda(mu)) for mu in partitions_of(n)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_by_brute_force(n):
    counts = {}
    for perm in itertools.permutations(range(n)):
        seen, cyc = set(), []
        for i in range(n):
            if i in seen:
                continue
            j, length = i, 0
            while j not in seen:
                seen.add(j)
                j = perm[j]
                length += 1
            cyc.append(length)
        mu = tuple(sorted(cyc, reverse=True))
        counts[mu] = counts.get(mu, 0) + 1
    assert counts == {mu: class_size(mu) for mu in partitions_of(n)}


def test_set_partition_counts_are_bell_numbers():
    assert [len(all_set_partitions(n)) for n in range(1, 9)] == BELL_NUMBERS[1:9]


@pytest.mark.parametrize("n", range(1, 8))
def test_set_partitions_by_block_sizes(n):
    for k in range(1, n + 1):
        parts = set_partitions(n, k)
        assert len(parts) == stirling_second(n, k)
        by_shape = {}
        for J in parts:
            by_shape[J.shape()] = by_shape.get(J.shape(), 0) + 1
        for shape, c in by_shape.items():
            assert c == count_by_block_sizes(multiplicities(shape))


def test_set_partition_canonical_form():
    J = SetPartition(4, ((4, 2), (3, 1)))
    assert J.blocks == ((1, 3), (2, 4))
    assert str(J) == "{13,24}"
    assert SetPartition.from_labels([0, 1, 0, 1]) == J
    assert J.act((2, 3, 4, 1)) == SetPartition(4, ((2, 4), (3, 1)))
    with pytest.raises(ValueError):
        SetPartition(3, ((1, 2),))


def test_refinement_order():
    fine = SetPartition(4, ((1,), (2,), (3, 4)))
    coarse = SetPartition(4, ((1, 2), (3, 4)))
    assert refines(fine, coarse) and not refines(coarse, fine)


def test_stirling_first_against_cycle_count():
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert stirling_first(n, k) == stirling_first_by_cycles(n, k)


@pytest.mark.parametrize("n", range(0, 13))
def test_descending_identity(n):
    assert descending_identity(n)


@pytest.mark.parametrize("n", range(0, 10))
def test_second_kind_generating_function(n):
    # x^n = sum_k S(n,k) x(x-1)...(x-k+1), checked as polynomials
    total = [0] * (n + 1)
    for k in range(n + 1):
        for i, c in enumerate(falling_factorial_coeffs(k)):
            total[i] += stirling_second(n, k) * c
    assert total == [0] * n + [1]


def test_stirling_matrices_are_inverse():
    mats = stirling_matrices(12)
    assert mats.product() == [[int(i == j) for j in range(12)] for i in range(12)]


def test_unsigned_first_kind_counts_permutations():
    for n in range(1, 9):
        assert sum(abs(stirling_first(n, k)) for k in range(n + 1)) == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_bell_polynomial_identities(n):
    ones = [1] * n
    facts = [math.factorial(j) for j in range(n)]
    for k in range(1, n + 1):
        assert bell_partial(n, k, ones) == stirling_second(n, k)
        assert bell_partial(n, k, facts) == abs(stirling_first(n, k))


@given(st.integers(min_value=1, max_value=9), st.data())
def test_bell_methods_agree(n, data):
    f = data.draw(st.lists(st.integers(min_value=-3, max_value=3), min_size=n, max_size=n))
    for k in range(1, n + 1):
        assert bell_partial(n, k, f, method="enumerate") == bell_partial(n, k, f, method="recurrence")


def test_bell_inverse_relation():
    # compositional inverses: B(n,k; s(j,1)) against B(n,k; S(j,1)) reproduce the Stirling matrices
    N = 7
    s1 = [stirling_first(j, 1) for j in range(1, N + 1)]
    mat = [[bell_partial(n, k, s1) for k in range(1, N + 1)] for n in range(1, N + 1)]
    assert mat == [[stirling_first(n, k) for k in range(1, N + 1)] for n in range(1, N + 1)]
