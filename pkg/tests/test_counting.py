"""Counting formulas against independent brute-force oracles and identities."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertrees import (
    DegreeVector,
    PartsMismatch,
    ProfileMismatch,
    SizePartition,
    count_bipartite,
    count_hypertrees,
    count_hypertrees_by_sizes,
    count_hypertrees_total,
    degree_profile_probability,
    multinomial,
    probability_json,
    size_partitions,
    size_profile_probability,
    split_identity_check,
    stirling1_unsigned,
    stirling2,
    weighted_total,
)


def compositions(total, slots):
    if slots == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, slots - 1):
            yield (head,) + rest


# ----------------------------------------------------------------- multinomial

def test_multinomial_values():
    assert multinomial(3, [2, 1]) == 3
    assert multinomial(0, []) == 1
    assert multinomial(6, [2, 2, 2]) == 90


def test_multinomial_mismatch():
    with pytest.raises(PartsMismatch):
        multinomial(3, [2, 2])
    with pytest.raises(PartsMismatch):
        multinomial(3, [4, -1])


@settings(max_examples=100)
@given(st.lists(st.integers(0, 8), min_size=1, max_size=5))
def test_multinomial_is_factorial_ratio(parts):
    n = sum(parts)
    denom = math.prod(math.factorial(p) for p in parts)
    assert multinomial(n, parts) == math.factorial(n) // denom


# ------------------------------------------------------------ Stirling numbers

def brute_stirling2(n, k):
    """Count surjective block assignments directly."""
    count = 0
    for assignment in itertools.product(range(k), repeat=n):
        if len(set(assignment)) == k:
            count += 1
    return count // math.factorial(k) if k else (1 if n == 0 else 0)


def brute_stirling1(n, k):
    """Count permutations of {1..n} with k cycles."""
    count = 0
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for start in range(n):
            if not seen[start]:
                cycles += 1
                x = start
                while not seen[x]:
                    seen[x] = True
                    x = perm[x]
        if cycles == k:
            count += 1
    return count


def test_stirling2_values():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    for n in range(7):
        assert stirling2(n, n) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(3, 5) == 0
    assert stirling2(0, 0) == 1


def test_stirling2_against_brute_force():
    for n in range(7):
        for k in range(n + 2):
            assert stirling2(n, k) == brute_stirling2(n, k)


def test_stirling2_against_inclusion_exclusion():
    for n in range(13):
        for k in range(n + 1):
            if k == 0:
                continue
            total = sum(
                (-1) ** i * math.comb(k, i) * (k - i) ** n for i in range(k + 1)
            )
            assert stirling2(n, k) == total // math.factorial(k)


def test_stirling1_values():
    assert stirling1_unsigned(3, 2) == 3
    assert stirling1_unsigned(4, 2) == 11
    for n in range(7):
        assert stirling1_unsigned(n, n) == 1


def test_stirling1_against_brute_force():
    for n in range(7):
        for k in range(n + 2):
            assert stirling1_unsigned(n, k) == brute_stirling1(n, k)


def test_stirling1_against_rising_factorial():
    # x (x+1) ... (x+n-1) = sum_k c(n, k) x^k
    for n in range(13):
        coeffs = [1]  # polynomial in x, constant first
        for j in range(n):
            shifted = [0] + coeffs
            coeffs = [shifted[i] + j * (coeffs[i] if i < len(coeffs) else 0)
                      for i in range(len(shifted))]
        for k in range(n + 1):
            assert stirling1_unsigned(n, k) == coeffs[k]


# ------------------------------------------------------------ hypertree counts

def test_count_hypertrees_examples():
    assert count_hypertrees(SizePartition([2, 1]), DegreeVector([0, 1, 0, 0])) == 3
    assert count_hypertrees(SizePartition([4]), DegreeVector([0, 0, 0, 0, 0])) == 1
    # ordinary labelled trees with prescribed degrees
    for n in range(2, 6):
        lam = SizePartition([1] * n)
        for mu in compositions(n - 1, n + 1):
            assert count_hypertrees(lam, DegreeVector(mu)) == multinomial(n - 1, mu)


def test_count_hypertrees_profile_mismatch():
    with pytest.raises(ProfileMismatch):
        count_hypertrees(SizePartition([2, 1]), DegreeVector([0, 1, 0]))
    with pytest.raises(ProfileMismatch):
        count_hypertrees(SizePartition([2, 1]), DegreeVector([1, 1, 0, 0]))


def test_count_by_sizes_examples():
    assert count_hypertrees_by_sizes(SizePartition([2, 1])) == 12
    assert count_hypertrees_by_sizes(SizePartition([5])) == 1
    for n in range(1, 7):
        assert count_hypertrees_by_sizes(SizePartition([1] * n)) == (n + 1) ** (n - 1)


def test_sum_over_degrees_gives_size_count():
    for n in range(1, 7):
        for k in range(1, n + 1):
            for parts in size_partitions(n, k):
                lam = SizePartition(parts)
                total = sum(
                    count_hypertrees(lam, DegreeVector(mu))
                    for mu in compositions(k - 1, n + 1)
                )
                assert total == count_hypertrees_by_sizes(lam)


def test_sum_over_sizes_gives_husimi_total():
    for n in range(1, 9):
        for k in range(1, n + 1):
            total = sum(
                count_hypertrees_by_sizes(SizePartition(parts))
                for parts in size_partitions(n, k)
            )
            assert total == count_hypertrees_total(n, k)


def test_totals_examples():
    assert count_hypertrees_total(3, 2) == 12
    assert count_hypertrees_total(3, 1) == 1
    for n in range(1, 8):
        assert count_hypertrees_total(n, n) == (n + 1) ** (n - 1)
    with pytest.raises(ProfileMismatch):
        count_hypertrees_total(3, 4)
    with pytest.raises(ProfileMismatch):
        count_hypertrees_total(3, 0)


def test_weighted_total_examples():
    assert weighted_total(3, 2) == 12
    assert weighted_total(4, 2) == 55
    for n in range(1, 7):
        assert weighted_total(n, n) == (n + 1) ** (n - 1)


# ------------------------------------------------------------ bipartite counts

def test_count_bipartite_examples():
    assert count_bipartite((3,), (0, 0, 0, 0)) == 1
    assert count_bipartite((1, 0), (1, 0)) == 1
    with pytest.raises(ProfileMismatch):
        count_bipartite((1, 1), (1, 0))


def test_count_bipartite_sums_to_spanning_tree_count():
    for a in range(5):
        for b in range(5):
            total = sum(
                count_bipartite(alpha, beta)
                for alpha in compositions(b, a + 1)
                for beta in compositions(a, b + 1)
            )
            assert total == (a + 1) ** b * (b + 1) ** a


# -------------------------------------------------------------- probabilities

def test_size_profile_probability():
    assert size_profile_probability(SizePartition([3]), 3, 1) == 1
    assert size_profile_probability(SizePartition([2, 1]), 3, 2) == 1
    for n in range(1, 9):
        for k in range(1, n + 1):
            total = sum(
                size_profile_probability(SizePartition(parts), n, k)
                for parts in size_partitions(n, k)
            )
            assert total == Fraction(1)


def test_degree_profile_probability():
    assert degree_profile_probability(DegreeVector([0, 0]), 1, 1) == 1
    assert degree_profile_probability(DegreeVector([0, 1, 0, 0]), 3, 2) == Fraction(1, 4)
    for n in range(1, 6):
        for k in range(1, n + 1):
            total = sum(
                degree_profile_probability(DegreeVector(mu), n, k)
                for mu in compositions(k - 1, n + 1)
            )
            assert total == Fraction(1)


def test_probability_json():
    assert probability_json(Fraction(1, 4)) == {"num": "1", "den": "4"}


# ------------------------------------------------------------- split identity

def test_split_identity():
    assert split_identity_check(1) == (1, 1)
    assert split_identity_check(2) == (3, 3)
    for n in range(1, 21):
        lhs, rhs = split_identity_check(n)
        assert lhs == rhs
    with pytest.raises(ProfileMismatch):
        split_identity_check(0)


# ------------------------------------------------------------ size partitions

def test_size_partitions_generator():
    assert list(size_partitions(3, 2)) == [(2, 1)]
    assert list(size_partitions(6, 3)) == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
    assert list(size_partitions(0, 0)) == [()]
    assert list(size_partitions(2, 3)) == []
    for n in range(9):
        for k in range(n + 1):
            parts_list = list(size_partitions(n, k))
            assert len(parts_list) == len(set(parts_list))
            for parts in parts_list:
                assert sum(parts) == n and len(parts) == k
                assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))
