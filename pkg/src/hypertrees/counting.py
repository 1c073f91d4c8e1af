"""Exact closed-form counts and probabilities for hypertrees and bipartite trees.

All counts are Python integers (arbitrary precision) and all probabilities
are ``fractions.Fraction`` values, so results are exact with no rounding
anywhere.  Stirling tables are cached per (n, k) query.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import PartsMismatch, ProfileMismatch
from .model import DegreeVector, SizePartition

BigCount = int
Probability = Fraction


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts_1! ... parts_m!); parts must be nonnegative and sum to n."""
    if n < 0:
        raise PartsMismatch(f"total must be nonnegative, got {n}")
    if any(not isinstance(p, int) or p < 0 for p in parts):
        raise PartsMismatch(f"parts must be nonnegative integers: {list(parts)}")
    if sum(parts) != n:
        raise PartsMismatch(f"parts {list(parts)} sum to {sum(parts)}, expected {n}")
    out = 1
    remaining = n
    for p in parts:
        out *= math.comb(remaining, p)
        remaining -= p
    return out


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Partitions of {1..n} into k nonempty blocks; 0 outside the triangle."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    # one-row DP over S2(i, j) = j*S2(i-1, j) + S2(i-1, j-1), columns 0..k
    row = [1] + [0] * k
    for i in range(1, n + 1):
        nxt = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            nxt[j] = j * row[j] + row[j - 1]
        row = nxt
        row[0] = 0
    return row[k]


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, k: int) -> int:
    """Permutations of {1..n} with exactly k cycles; 0 outside the triangle."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    # c(i, j) = (i-1)*c(i-1, j) + c(i-1, j-1)
    row = [1] + [0] * k
    for i in range(1, n + 1):
        nxt = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            nxt[j] = (i - 1) * row[j] + row[j - 1]
        row = nxt
        row[0] = 0
    return row[k]


def _shape_count(lam: SizePartition) -> int:
    """Number of set partitions of {1..n} with block sizes lam."""
    mult = multinomial(lam.n, lam.parts)
    sym = 1
    for count in lam.multiplicities().values():
        sym *= math.factorial(count)
    q, r = divmod(mult, sym)
    assert r == 0, f"multinomial not divisible by symmetry factor for {lam}"
    return q


def count_hypertrees(lam: SizePartition, mu: DegreeVector) -> int:
    """Hypertrees on {0..n} with edge sizes 1+lam and vertex degrees 1+mu."""
    n, k = lam.n, lam.k
    if mu.n != n:
        raise ProfileMismatch(
            f"degree vector covers 0..{mu.n} but size partition implies 0..{n}"
        )
    if mu.k != k:
        raise ProfileMismatch(
            f"degree vector sums to {mu.k - 1}, expected k - 1 = {k - 1}"
        )
    if k < 1:
        raise ProfileMismatch("need at least one hyperedge (k >= 1)")
    return _shape_count(lam) * multinomial(k - 1, mu.mu)


def count_hypertrees_by_sizes(lam: SizePartition) -> int:
    """Hypertrees on {0..n} with edge sizes 1+lam, any degrees."""
    n, k = lam.n, lam.k
    if k < 1:
        raise ProfileMismatch("need at least one hyperedge (k >= 1)")
    return _shape_count(lam) * (n + 1) ** (k - 1)


def count_hypertrees_total(n: int, k: int) -> int:
    """All hypertrees with n+1 labelled vertices and k hyperedges."""
    if not 1 <= k <= n:
        raise ProfileMismatch(f"need 1 <= k <= n, got k={k}, n={n}")
    return (n + 1) ** (k - 1) * stirling2(n, k)


def weighted_total(n: int, k: int) -> int:
    """Sum over hypertrees with k hyperedges of the weight prod (lam_j - 1)!."""
    if not 1 <= k <= n:
        raise ProfileMismatch(f"need 1 <= k <= n, got k={k}, n={n}")
    return (n + 1) ** (k - 1) * stirling1_unsigned(n, k)


def count_bipartite(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Bipartite trees with deg(u_i) = 1 + alpha_i and deg(v_j) = 1 + beta_j."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    if not alpha or not beta:
        raise ProfileMismatch("alpha and beta must each have at least one entry")
    if any(not isinstance(x, int) or x < 0 for x in alpha + beta):
        raise ProfileMismatch("alpha and beta entries must be nonnegative integers")
    a = len(alpha) - 1
    b = len(beta) - 1
    if sum(alpha) != b:
        raise ProfileMismatch(f"alpha sums to {sum(alpha)}, expected b = {b}")
    if sum(beta) != a:
        raise ProfileMismatch(f"beta sums to {sum(beta)}, expected a = {a}")
    return multinomial(a, beta) * multinomial(b, alpha)


def size_profile_probability(lam: SizePartition, n: int, k: int) -> Fraction:
    """Probability that a uniform hypertree with k hyperedges has shape lam."""
    if lam.n != n or lam.k != k:
        raise ProfileMismatch(
            f"partition has n={lam.n}, k={lam.k}; expected n={n}, k={k}"
        )
    if not 1 <= k <= n:
        raise ProfileMismatch(f"need 1 <= k <= n, got k={k}, n={n}")
    return Fraction(_shape_count(lam), stirling2(n, k))


def degree_profile_probability(mu: DegreeVector, n: int, k: int) -> Fraction:
    """Probability that a uniform hypertree with k hyperedges has degrees 1+mu."""
    if mu.n != n or mu.k != k:
        raise ProfileMismatch(
            f"degree vector has n={mu.n}, k={mu.k}; expected n={n}, k={k}"
        )
    if not 1 <= k <= n:
        raise ProfileMismatch(f"need 1 <= k <= n, got k={k}, n={n}")
    return Fraction(multinomial(k - 1, mu.mu), (n + 1) ** (k - 1))


def split_identity_check(n: int) -> tuple[int, int]:
    """Both sides of (n+1)^{n-1} = sum_k C(n,k) (k+1)^{n-1-k} (n-k)^k."""
    if n < 1:
        raise ProfileMismatch(f"identity defined for n >= 1, got {n}")
    lhs = (n + 1) ** (n - 1)
    rhs = sum(
        math.comb(n, k) * (k + 1) ** (n - 1 - k) * (n - k) ** k
        for k in range(n)
    )
    return lhs, rhs


def size_partitions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n into exactly k positive parts, weakly decreasing."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k < 0 or n < k:
        return

    def rec(total, parts_left, max_part):
        if parts_left == 1:
            if 1 <= total <= max_part:
                yield (total,)
            return
        top = min(max_part, total - parts_left + 1)
        for first in range(top, 0, -1):
            if first * parts_left < total:
                break
            for rest in rec(total - first, parts_left - 1, first):
                yield (first,) + rest

    yield from rec(n, k, n)


def probability_json(p: Fraction) -> dict:
    """Serialize an exact probability as decimal strings."""
    return {"num": str(p.numerator), "den": str(p.denominator)}
