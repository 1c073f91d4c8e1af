"""Uniform random generation of hypertrees and bipartite trees.

Sampling reduces to drawing a uniform code and decoding it: because the
codecs are bijections, the decoded structure is uniform over its class.
Every sampler takes an explicit :class:`~hypertrees.rng.SplitMix64` stream;
identical seed and parameters reproduce identical structures byte for byte.
"""

from __future__ import annotations

from .bipartite import BipartiteCode, decode_bipartite
from .codec import HypertreeCode, decode
from .counting import _shape_count, size_partitions, stirling2
from .errors import ProfileMismatch
from .model import BipartiteTree, DegreeVector, Hypertree, SetPartition, SizePartition
from .rng import SplitMix64


def sample_set_partition(lam: SizePartition, rng: SplitMix64) -> SetPartition:
    """Uniform partition of {1..n} with block-size multiset lam.

    Shuffling 1..n and cutting consecutive runs of sizes lam_1..lam_k is
    uniform because every partition of this shape arises from the same
    number of orderings.
    """
    n = lam.n
    xs = list(range(1, n + 1))
    rng.shuffle(xs)
    blocks = []
    at = 0
    for size in lam.parts:
        blocks.append(xs[at:at + size])
        at += size
    return SetPartition(n, blocks)


def sample_word(
    length: int,
    alphabet_size: int,
    rng: SplitMix64,
    multiplicities=None,
) -> tuple:
    """Uniform word; with multiplicities, a uniform shuffle of that multiset."""
    if length < 0 or alphabet_size < 1:
        raise ProfileMismatch(
            f"need length >= 0 and alphabet >= 1, got {length}, {alphabet_size}"
        )
    if multiplicities is None:
        return tuple(rng.randbelow(alphabet_size) for _ in range(length))
    mults = tuple(multiplicities)
    if len(mults) != alphabet_size:
        raise ProfileMismatch(
            f"{len(mults)} multiplicities for alphabet of size {alphabet_size}"
        )
    if any(not isinstance(m, int) or m < 0 for m in mults):
        raise ProfileMismatch(f"multiplicities must be nonnegative: {list(mults)}")
    if sum(mults) != length:
        raise ProfileMismatch(
            f"multiplicities sum to {sum(mults)}, expected length {length}"
        )
    letters = [letter for letter, m in enumerate(mults) for _ in range(m)]
    rng.shuffle(letters)
    return tuple(letters)


def sample_hypertree(
    lam: SizePartition, rng: SplitMix64, mu: DegreeVector | None = None
) -> Hypertree:
    """Uniform hypertree with edge sizes 1+lam (and degrees 1+mu if given).

    Draw order is fixed: partition first, then word.
    """
    n, k = lam.n, lam.k
    if k < 1:
        raise ProfileMismatch("need at least one hyperedge (k >= 1)")
    mults = None
    if mu is not None:
        if mu.n != n or mu.k != k:
            raise ProfileMismatch(
                f"degree vector has n={mu.n}, k={mu.k}; expected n={n}, k={k}"
            )
        mults = mu.mu
    partition = sample_set_partition(lam, rng)
    word = sample_word(k - 1, n + 1, rng, mults)
    return decode(HypertreeCode(partition, word))


def sample_hypertree_uniform(n: int, k: int, rng: SplitMix64) -> Hypertree:
    """Uniform hypertree over all with n+1 vertices and k hyperedges.

    The size partition is drawn first by exact inverse CDF (its marginal
    has weight shape-count / S2(n, k)), then the shaped sampler runs.
    """
    if not 1 <= k <= n:
        raise ProfileMismatch(f"need 1 <= k <= n, got k={k}, n={n}")
    shapes = [SizePartition(parts) for parts in size_partitions(n, k)]
    weights = [_shape_count(lam) for lam in shapes]
    total = sum(weights)
    assert total == stirling2(n, k), "shape weights must sum to S2(n, k)"
    r = rng.randbelow(total)
    acc = 0
    for lam, weight in zip(shapes, weights):
        acc += weight
        if r < acc:
            return sample_hypertree(lam, rng)
    raise AssertionError("inverse CDF walked past the last shape")


def sample_bipartite_tree(
    a: int,
    b: int,
    rng: SplitMix64,
    alpha=None,
    beta=None,
) -> BipartiteTree:
    """Uniform spanning tree of K_{a+1,b+1}, optionally with fixed degrees.

    Draw order is fixed: the V-word (length a) first, then the U-word
    (length b).  alpha prescribes deg(u_i) - 1, beta prescribes deg(v_j) - 1.
    """
    if a < 0 or b < 0:
        raise ProfileMismatch(f"class sizes must be nonnegative, got a={a}, b={b}")
    beta_mults = None
    if beta is not None:
        beta_mults = tuple(beta)
        if len(beta_mults) != b + 1 or sum(beta_mults) != a:
            raise ProfileMismatch(
                f"beta must have b+1={b + 1} entries summing to a={a}: {list(beta_mults)}"
            )
    alpha_mults = None
    if alpha is not None:
        alpha_mults = tuple(alpha)
        if len(alpha_mults) != a + 1 or sum(alpha_mults) != b:
            raise ProfileMismatch(
                f"alpha must have a+1={a + 1} entries summing to b={b}: {list(alpha_mults)}"
            )
    w = sample_word(a, b + 1, rng, beta_mults)
    wprime = sample_word(b, a + 1, rng, alpha_mults)
    return decode_bipartite(BipartiteCode(a, b, w, wprime))
