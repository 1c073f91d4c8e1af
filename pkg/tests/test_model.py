"""Validation, distances, marks, profiles and the naive cross-checker."""

import itertools
import json

import pytest

from hypertrees import (
    BadPartition,
    BipartiteTree,
    CycleOutsideEdge,
    DegreeVector,
    Disconnected,
    EdgeOverlap,
    EmptyTree,
    Hypergraph,
    Hypertree,
    MalformedHypergraph,
    NonUniqueMarked,
    NotATree,
    NotBipartite,
    ProfileMismatch,
    SetPartition,
    SizePartition,
    SplitMix64,
    distance,
    enumerate_hypertrees,
    marked_vertex,
    profile,
    validate_hypertree,
)
from hypertrees.model import _check_hypertree


def tree(n, edges):
    return Hypertree(Hypergraph(n, edges))


# ---------------------------------------------------------------- validation

def test_single_edge_is_valid():
    t = tree(1, [[0, 1]])
    assert t.k == 1


def test_two_edge_example_valid():
    t = tree(3, [[0, 1], [1, 2, 3]])
    assert t.k == 2
    assert sum(len(e) for e in t.edges) == 3 + 2


def test_overlap_rejected():
    with pytest.raises(EdgeOverlap):
        tree(2, [[0, 1], [0, 1, 2]])


def test_cycle_outside_edge_rejected():
    # triangle of three 2-edges: the 3-cycle lies in no single hyperedge
    with pytest.raises(CycleOutsideEdge):
        tree(2, [[0, 1], [0, 2], [1, 2]])


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        tree(3, [[0, 1], [2, 3]])


def test_isolated_vertex_rejected():
    with pytest.raises(Disconnected):
        tree(2, [[0, 1]])


def test_degenerate_single_vertex_accepted():
    t = tree(0, [])
    assert t.k == 0
    with pytest.raises(EmptyTree):
        profile(t)


def test_malformed_inputs():
    with pytest.raises(MalformedHypergraph):
        Hypergraph(2, [[0]])
    with pytest.raises(MalformedHypergraph):
        Hypergraph(2, [[0, 3]])
    with pytest.raises(MalformedHypergraph):
        Hypergraph(2, [[0, 0, 1]])
    with pytest.raises(MalformedHypergraph):
        Hypergraph(2, [[0, 1], [1, 0]])


def test_canonicalization_and_equality():
    g1 = Hypergraph(3, [[3, 2, 1], [1, 0]])
    g2 = Hypergraph(3, [[0, 1], [1, 2, 3]])
    assert g1 == g2
    assert g1.edges == ((0, 1), (1, 2, 3))
    assert json.loads(g1.dumps()) == {"n": 3, "edges": [[0, 1], [1, 2, 3]]}


def test_from_json_accepts_unsorted_and_canonicalizes():
    g = Hypergraph.from_json_dict({"n": 3, "edges": [[1, 2, 3], [1, 0]]})
    assert g.dumps() == '{"n":3,"edges":[[0,1],[1,2,3]]}'


# ------------------------------------------------------------------ distance

def test_distance_examples():
    t = tree(3, [[0, 1], [1, 2, 3]])
    assert distance(t, 0, 0) == 0
    assert distance(t, 0, 3) == 2
    single = tree(3, [[0, 1, 2, 3]])
    assert distance(single, 1, 3) == 1


def test_distance_bad_label():
    t = tree(1, [[0, 1]])
    with pytest.raises(ValueError):
        distance(t, 0, 5)


# ------------------------------------------------------------- marked vertex

def test_marked_vertex_examples():
    t = tree(3, [[0, 1], [1, 2, 3]])
    assert marked_vertex(t, [0, 1]) == 0
    assert marked_vertex(t, [1, 2, 3]) == 1
    star = tree(3, [[0, 1, 2], [0, 3]])
    assert all(marked_vertex(star, e) == 0 for e in star.edges)


def test_marked_vertex_unknown_edge():
    t = tree(1, [[0, 1]])
    with pytest.raises(ValueError):
        marked_vertex(t, [0, 1, 2])


def test_non_unique_mark_detected_on_corrupt_input():
    # a triangle is not a hypertree; the mark helper on its raw graph
    # sees two vertices of [1, 2] at distance 1
    g = Hypergraph(2, [[0, 1], [0, 2], [1, 2]])
    with pytest.raises((NonUniqueMarked, CycleOutsideEdge)):
        _check_hypertree(g)


# -------------------------------------------------------------------- profile

def test_profile_examples():
    lam, mu = profile(tree(3, [[0, 1], [1, 2, 3]]))
    assert lam.parts == (2, 1)
    assert mu.mu == (0, 1, 0, 0)

    lam, mu = profile(tree(4, [[0, 1, 2, 3, 4]]))
    assert lam.parts == (4,)
    assert mu.mu == (0, 0, 0, 0, 0)

    lam, mu = profile(tree(3, [[0, 1], [1, 2], [2, 3]]))
    assert lam.parts == (1, 1, 1)
    assert mu.mu == (0, 1, 1, 0)


def test_identities_hold_over_enumeration():
    for n in range(1, 5):
        for k in range(1, n + 1):
            for t in enumerate_hypertrees(n, k):
                sizes = sum(len(e) for e in t.edges)
                assert sizes == n + k
                assert sum(t.graph.degrees()) == sizes
                lam, mu = profile(t)
                assert lam.n == n and lam.k == k
                assert sum(mu.mu) == k - 1


# ------------------------------------------------------------- profile types

def test_size_partition_canonicalizes():
    lam = SizePartition([1, 3, 2])
    assert lam.parts == (3, 2, 1)
    assert lam.n == 6 and lam.k == 3
    assert SizePartition([2, 2, 1]).multiplicities() == {2: 2, 1: 1}
    with pytest.raises(ProfileMismatch):
        SizePartition([2, 0])


def test_degree_vector_checks():
    mu = DegreeVector([0, 1, 0, 0])
    assert mu.n == 3 and mu.k == 2
    with pytest.raises(ProfileMismatch):
        DegreeVector([1, -1])


def test_set_partition_validation():
    p = SetPartition(3, [[2, 3], [1]])
    assert p.blocks == ((1,), (2, 3))
    assert p.shape().parts == (2, 1)
    with pytest.raises(BadPartition):
        SetPartition(3, [[1, 2]])
    with pytest.raises(BadPartition):
        SetPartition(3, [[1, 2], [2, 3]])
    with pytest.raises(BadPartition):
        SetPartition(3, [[1, 2], [3], []])
    with pytest.raises(BadPartition):
        SetPartition(2, [[1, 2, 3]])


def test_bipartite_tree_validation():
    t = BipartiteTree(1, 1, [(1, 1), (0, 0), (1, 0)])
    assert t.edges == ((0, 0), (1, 0), (1, 1))
    assert t.u_degrees() == (1, 2)
    assert t.v_degrees() == (2, 1)
    with pytest.raises(NotATree):
        BipartiteTree(1, 1, [(0, 0), (1, 1)])
    with pytest.raises(NotATree):
        BipartiteTree(1, 1, [(0, 0), (0, 1), (1, 0), (1, 1)])
    with pytest.raises(NotBipartite):
        BipartiteTree(1, 1, [(0, 0), (1, 0), (1, 2)])
    with pytest.raises(NotBipartite):
        BipartiteTree(1, 1, [(0, 0), (1, 0), (1,)])


# ---------------------------------------------- naive independent classifier

def naive_classify(n, edges):
    """Classify a hypergraph with maximally naive methods.

    Returns the expected error class name, or None for a valid hypertree.
    Precedence: EdgeOverlap, then CycleOutsideEdge, then Disconnected.
    """
    edge_sets = [frozenset(e) for e in edges]
    for i in range(len(edge_sets)):
        for j in range(i + 1, len(edge_sets)):
            if len(edge_sets[i] & edge_sets[j]) >= 2:
                return "EdgeOverlap"

    def adjacent(v, w):
        return any(v in e and w in e for e in edge_sets)

    vertices = list(range(n + 1))
    for size in range(3, n + 2):
        for subset in itertools.combinations(vertices, size):
            if any(set(subset) <= e for e in edge_sets):
                continue
            first = subset[0]
            for perm in itertools.permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue  # skip mirror images
                cycle = (first,) + perm
                if all(
                    adjacent(cycle[i], cycle[(i + 1) % len(cycle)])
                    for i in range(len(cycle))
                ):
                    return "CycleOutsideEdge"

    reached = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for e in edge_sets:
            if v in e:
                for w in e:
                    if w not in reached:
                        reached.add(w)
                        frontier.append(w)
    if len(reached) != n + 1:
        return "Disconnected"

    if sum(len(e) for e in edge_sets) != n + len(edge_sets):
        return "SizeIdentityViolated"
    return None


def validator_classify(n, edges):
    try:
        validate_hypertree(Hypergraph(n, edges))
    except (EdgeOverlap, CycleOutsideEdge, Disconnected) as exc:
        return type(exc).__name__
    return None


def all_candidate_edges(n):
    return [
        c
        for size in range(2, n + 2)
        for c in itertools.combinations(range(n + 1), size)
    ]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rejection_completeness_exhaustive(n):
    cands = all_candidate_edges(n)
    for bits in range(1 << len(cands)):
        edges = [cands[i] for i in range(len(cands)) if bits >> i & 1]
        assert validator_classify(n, edges) == naive_classify(n, edges)


@pytest.mark.parametrize("n,samples", [(4, 400), (5, 150)])
def test_rejection_completeness_sampled(n, samples):
    cands = all_candidate_edges(n)
    rng = SplitMix64(1234 + n)
    seen_classes = set()
    for _ in range(samples):
        count = 1 + rng.randbelow(n + 1)
        picked = sorted({rng.randbelow(len(cands)) for _ in range(count)})
        edges = [cands[i] for i in picked]
        got = validator_classify(n, edges)
        assert got == naive_classify(n, edges)
        seen_classes.add(got)
    # the sample must actually exercise the interesting classes
    assert {"EdgeOverlap", "Disconnected"} <= seen_classes
