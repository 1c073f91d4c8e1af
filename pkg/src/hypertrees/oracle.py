"""Brute-force ground truth: exhaustive enumeration at desk scale.

Hypertrees are generated by depth-first search over candidate hyperedge
sets with hyperforest pruning, bipartite trees by filtering edge subsets of
the complete bipartite graph.  Nothing here touches the codecs or the
closed-form counts, so the census can certify both.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Iterator

from .errors import BoundExceeded, ProfileMismatch
from .model import BipartiteTree, Hypergraph, Hypertree, _json_compact, profile

DEFAULT_MAX_N = 5
DEFAULT_MAX_AB = 3


@dataclass
class EnumerationReport:
    """Census of one instance: total plus per-profile counts."""

    kind: str
    params: dict
    total: int
    profiles: dict = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    def to_json_dict(self) -> dict:
        entries = []
        if self.kind == "hypertree_profile_census":
            for (lam, mu), count in sorted(self.profiles.items()):
                entries.append({"lambda": list(lam), "mu": list(mu), "count": str(count)})
        else:
            for (alpha, beta), count in sorted(self.profiles.items()):
                entries.append(
                    {"alpha": list(alpha), "beta": list(beta), "count": str(count)}
                )
        return {
            "kind": self.kind,
            "params": self.params,
            "total": str(self.total),
            "profiles": entries,
            "elapsed_seconds": self.elapsed_seconds,
        }

    def dumps(self) -> str:
        return _json_compact(self.to_json_dict())


def _candidate_hyperedges(n: int) -> list:
    return sorted(
        itertools.chain.from_iterable(
            itertools.combinations(range(n + 1), size) for size in range(2, n + 2)
        )
    )


def enumerate_hypertrees(
    n: int, k: int, max_n: int = DEFAULT_MAX_N
) -> Iterator[Hypertree]:
    """Every hypertree on {0..n} with k hyperedges, in lexicographic order.

    Candidate hyperedges (all vertex subsets of size >= 2) are scanned in
    ascending order; a partial selection is pruned as soon as it closes a
    cycle in the incidence structure or its sizes cannot reach n + k.
    """
    if n > max_n:
        raise BoundExceeded(f"n={n} above enumeration bound {max_n}")
    if not 1 <= k <= n:
        raise ProfileMismatch(f"need 1 <= k <= n, got k={k}, n={n}")
    cands = _candidate_hyperedges(n)
    target = n + k

    def find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def extend(start, chosen, parent, size_sum):
        remaining = k - len(chosen)
        if remaining == 0:
            root = find(parent, 0)
            if all(find(parent, v) == root for v in range(1, n + 1)):
                yield Hypertree(Hypergraph(n, chosen))
            return
        for idx in range(start, len(cands)):
            e = cands[idx]
            new_sum = size_sum + len(e)
            if new_sum + 2 * (remaining - 1) > target:
                continue
            if new_sum + (remaining - 1) * (n + 1) < target:
                continue
            roots = {find(parent, v) for v in e}
            if len(roots) < len(e):
                continue  # would close an incidence cycle
            branch = parent.copy()
            it = iter(roots)
            r0 = next(it)
            for r in it:
                branch[r] = r0
            yield from extend(idx + 1, chosen + [e], branch, new_sum)

    yield from extend(0, [], list(range(n + 1)), 0)


def enumerate_bipartite_trees(
    a: int, b: int, max_ab: int = DEFAULT_MAX_AB
) -> Iterator[BipartiteTree]:
    """Every spanning tree of K_{a+1,b+1}, in lexicographic edge order."""
    if a > max_ab or b > max_ab:
        raise BoundExceeded(f"(a={a}, b={b}) above enumeration bound {max_ab}")
    if a < 0 or b < 0:
        raise ProfileMismatch(f"class sizes must be nonnegative, got a={a}, b={b}")
    cands = [(i, j) for i in range(a + 1) for j in range(b + 1)]
    need = a + b + 1
    for subset in itertools.combinations(cands, need):
        parent = list(range(a + b + 2))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i, j in subset:
            ri, rj = find(i), find(a + 1 + j)
            if ri == rj:
                ok = False
                break
            parent[rj] = ri
        if ok:
            yield BipartiteTree(a, b, subset)


def profile_census(n: int, k: int, max_n: int = DEFAULT_MAX_N) -> EnumerationReport:
    """Group the hypertree enumeration by (size partition, degree vector)."""
    start = time.perf_counter()
    counts: dict = {}
    total = 0
    for tree in enumerate_hypertrees(n, k, max_n=max_n):
        lam, mu = profile(tree)
        key = (lam.parts, mu.mu)
        counts[key] = counts.get(key, 0) + 1
        total += 1
    return EnumerationReport(
        kind="hypertree_profile_census",
        params={"n": n, "k": k},
        total=total,
        profiles=counts,
        elapsed_seconds=time.perf_counter() - start,
    )


def bipartite_profile_census(
    a: int, b: int, max_ab: int = DEFAULT_MAX_AB
) -> EnumerationReport:
    """Group the bipartite enumeration by (alpha, beta) degree profiles."""
    from .bipartite import degree_profile

    start = time.perf_counter()
    counts: dict = {}
    total = 0
    for tree in enumerate_bipartite_trees(a, b, max_ab=max_ab):
        key = degree_profile(tree)
        counts[key] = counts.get(key, 0) + 1
        total += 1
    return EnumerationReport(
        kind="bipartite_profile_census",
        params={"a": a, "b": b},
        total=total,
        profiles=counts,
        elapsed_seconds=time.perf_counter() - start,
    )


def weighted_census(n: int, k: int, max_n: int = DEFAULT_MAX_N) -> int:
    """Sum of prod_j (lam_j - 1)! over the enumerated hypertrees."""
    total = 0
    for tree in enumerate_hypertrees(n, k, max_n=max_n):
        weight = 1
        for e in tree.edges:
            weight *= math.factorial(len(e) - 2)
        total += weight
    return total


def enumerate_set_partitions(n: int, k: int) -> Iterator[tuple]:
    """All partitions of {1..n} into k nonempty blocks, as block tuples.

    Generated via restricted growth strings, so blocks come out ordered by
    their minimum element.
    """
    if n == 0:
        if k == 0:
            yield ()
        return
    if k < 1 or k > n:
        return
    assignment = [0] * n

    def rec(i, used):
        if i == n:
            if used == k:
                blocks = [[] for _ in range(k)]
                for elem, blk in enumerate(assignment, start=1):
                    blocks[blk].append(elem)
                yield tuple(tuple(b) for b in blocks)
            return
        # prune: remaining elements must still be able to open k blocks
        if used + (n - i) < k:
            return
        for blk in range(min(used + 1, k)):
            assignment[i] = blk
            yield from rec(i + 1, max(used, blk + 1))

    yield from rec(0, 0)
