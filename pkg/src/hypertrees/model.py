"""Labelled hypergraphs, hypertrees, bipartite trees and profile types.

Vertex labels always form the full range 0..n.  Every structure
canonicalizes on construction (hyperedges as ascending tuples, edge lists in
lexicographic order) so that equality, hashing and serialization are
deterministic.  All values are immutable after construction and all
operations are pure functions.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Sequence

from .errors import (
    BadPartition,
    CycleOutsideEdge,
    Disconnected,
    EdgeOverlap,
    EmptyTree,
    MalformedHypergraph,
    NonUniqueMarked,
    NotATree,
    NotBipartite,
    ProfileMismatch,
    SizeIdentityViolated,
)


def _json_compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


class Hypergraph:
    """Vertices {0..n} plus a set of distinct hyperedges of size >= 2."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if not isinstance(n, int) or n < 0:
            raise MalformedHypergraph(f"n must be a nonnegative integer, got {n!r}")
        canon = []
        for raw in edges:
            e = tuple(sorted(raw))
            if len(e) < 2:
                raise MalformedHypergraph(f"hyperedge {list(e)} has fewer than two vertices")
            if any(not isinstance(v, int) or v < 0 or v > n for v in e):
                raise MalformedHypergraph(f"hyperedge {list(e)} uses labels outside 0..{n}")
            if len(set(e)) != len(e):
                raise MalformedHypergraph(f"hyperedge {list(e)} repeats a vertex")
            canon.append(e)
        canon.sort()
        for prev, cur in zip(canon, canon[1:]):
            if prev == cur:
                raise MalformedHypergraph(f"duplicate hyperedge {list(cur)}")
        self.n = n
        self.edges: tuple[tuple[int, ...], ...] = tuple(canon)

    @property
    def k(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of hyperedges containing v."""
        if not 0 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n}")
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> tuple[int, ...]:
        degs = [0] * (self.n + 1)
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return tuple(degs)

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={[list(e) for e in self.edges]})"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Hypergraph":
        try:
            n = d["n"]
            edges = d["edges"]
        except (KeyError, TypeError) as exc:
            raise MalformedHypergraph(f"expected keys 'n' and 'edges': {exc}") from exc
        return cls(n, edges)

    def dumps(self) -> str:
        """Canonical single-line JSON form."""
        return _json_compact(self.to_json_dict())


def _distances_from(graph: Hypergraph, source: int, target: int | None = None) -> list:
    """BFS distances over shared-hyperedge adjacency; None marks unreachable."""
    incident: list[list[int]] = [[] for _ in range(graph.n + 1)]
    for idx, e in enumerate(graph.edges):
        for v in e:
            incident[v].append(idx)
    dist: list = [None] * (graph.n + 1)
    dist[source] = 0
    edge_seen = [False] * len(graph.edges)
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v == target:
            break
        for idx in incident[v]:
            if edge_seen[idx]:
                continue
            edge_seen[idx] = True
            for w in graph.edges[idx]:
                if dist[w] is None:
                    dist[w] = dist[v] + 1
                    queue.append(w)
    return dist


def _first_overlap(edges) -> tuple | None:
    for j in range(len(edges)):
        ej = set(edges[j])
        for i in range(j):
            if len(ej.intersection(edges[i])) >= 2:
                return edges[i], edges[j]
    return None


def _check_hypertree(graph: Hypergraph) -> tuple[int, ...]:
    """Run the hypertree axioms on a hypergraph; return the per-edge marks.

    Adding a hyperedge whose vertices do not lie in pairwise distinct
    components closes a cycle in the vertex/edge incidence structure, which
    happens exactly when either two hyperedges overlap in >= 2 vertices or
    some cycle escapes every hyperedge.  The overlap case is reported first.
    """
    n, edges = graph.n, graph.edges
    k = len(edges)
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cyclic_edge = None
    for e in edges:
        roots = {find(v) for v in e}
        if len(roots) < len(e):
            cyclic_edge = e
            break
        it = iter(roots)
        r0 = next(it)
        for r in it:
            parent[r] = r0
    if cyclic_edge is not None:
        pair = _first_overlap(edges)
        if pair is not None:
            raise EdgeOverlap(
                f"hyperedges {list(pair[0])} and {list(pair[1])} share two or more vertices"
            )
        raise CycleOutsideEdge(
            f"hyperedge {list(cyclic_edge)} closes a cycle not contained in any hyperedge"
        )

    dist = _distances_from(graph, 0)
    for v, d in enumerate(dist):
        if d is None:
            raise Disconnected(f"vertex {v} is unreachable from vertex 0")

    if sum(len(e) for e in edges) != n + k:
        # unreachable once the graph is an acyclic connected incidence
        # structure; kept as a safety net against checker regressions
        raise SizeIdentityViolated(
            f"sum of hyperedge sizes {sum(len(e) for e in edges)} != n + k = {n + k}"
        )

    marks = []
    for e in edges:
        best = min(dist[v] for v in e)
        closest = [v for v in e if dist[v] == best]
        if len(closest) != 1:
            raise NonUniqueMarked(
                f"hyperedge {list(e)} has {len(closest)} vertices at distance {best} from 0"
            )
        marks.append(closest[0])
    return tuple(marks)


class Hypertree:
    """A connected hyperforest on {0..n}; validated on construction.

    ``marks[i]`` is the unique vertex of ``edges[i]`` closest to vertex 0.
    """

    def __init__(self, graph: Hypergraph):
        self.graph = graph
        self.marks = _check_hypertree(graph)

    @classmethod
    def _trusted(cls, graph: Hypergraph, marks: tuple[int, ...]) -> "Hypertree":
        # for codec/decoder output whose validity is guaranteed by the
        # bijection; skips re-validation
        tree = object.__new__(cls)
        tree.graph = graph
        tree.marks = marks
        return tree

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def k(self) -> int:
        return self.graph.k

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return self.graph.edges

    def __eq__(self, other):
        return isinstance(other, Hypertree) and self.graph == other.graph

    def __hash__(self):
        return hash(self.graph)

    def __repr__(self):
        return f"Hypertree(n={self.n}, edges={[list(e) for e in self.edges]})"

    def to_json_dict(self) -> dict:
        return self.graph.to_json_dict()

    def dumps(self) -> str:
        return self.graph.dumps()


def validate_hypertree(graph: Hypergraph) -> Hypertree:
    """Check the hyperforest + connectivity axioms and wrap the result."""
    return Hypertree(graph)


def distance(tree: Hypertree, v: int, w: int) -> int:
    """Minimal number of shared-hyperedge hops between two vertices."""
    for x in (v, w):
        if not 0 <= x <= tree.n:
            raise ValueError(f"vertex {x} outside 0..{tree.n}")
    if v == w:
        return 0
    dist = _distances_from(tree.graph, v, target=w)
    return dist[w]


def marked_vertex(tree: Hypertree, edge: Iterable[int]) -> int:
    """The unique vertex of the given hyperedge closest to vertex 0."""
    e = tuple(sorted(edge))
    try:
        idx = tree.edges.index(e)
    except ValueError:
        raise ValueError(f"{list(e)} is not a hyperedge of this hypertree") from None
    return tree.marks[idx]


class SizePartition:
    """Weakly decreasing positive parts lambda_1 >= ... >= lambda_k.

    Hyperedge sizes are 1 + lambda_i; n = sum(parts) and k = len(parts).
    """

    def __init__(self, parts: Iterable[int]):
        p = tuple(sorted(parts, reverse=True))
        if any(not isinstance(x, int) or x < 1 for x in p):
            raise ProfileMismatch(f"size partition parts must be positive integers: {p}")
        self.parts = p

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """nu_j = number of parts equal to j."""
        nu: dict[int, int] = {}
        for x in self.parts:
            nu[x] = nu.get(x, 0) + 1
        return nu

    def __eq__(self, other):
        return isinstance(other, SizePartition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"SizePartition({list(self.parts)})"


class DegreeVector:
    """Degree excesses mu_i = deg(i) - 1 for vertices 0..n."""

    def __init__(self, mu: Iterable[int]):
        m = tuple(mu)
        if not m:
            raise ProfileMismatch("degree vector must have at least one entry")
        if any(not isinstance(x, int) or x < 0 for x in m):
            raise ProfileMismatch(f"degree vector entries must be nonnegative integers: {m}")
        self.mu = m

    @property
    def n(self) -> int:
        return len(self.mu) - 1

    @property
    def k(self) -> int:
        return sum(self.mu) + 1

    def __eq__(self, other):
        return isinstance(other, DegreeVector) and self.mu == other.mu

    def __hash__(self):
        return hash(self.mu)

    def __repr__(self):
        return f"DegreeVector({list(self.mu)})"


def profile(tree: Hypertree) -> tuple[SizePartition, DegreeVector]:
    """Size partition (edge sizes minus one) and degree vector (degrees minus one)."""
    if tree.k == 0:
        raise EmptyTree("the degenerate single-vertex hypertree has no profile")
    lam = SizePartition(len(e) - 1 for e in tree.edges)
    mu = DegreeVector(d - 1 for d in tree.graph.degrees())
    return lam, mu


class SetPartition:
    """Partition of {1..n} into nonempty blocks, ordered by block minimum."""

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        if not isinstance(n, int) or n < 0:
            raise BadPartition(f"n must be a nonnegative integer, got {n!r}")
        canon = []
        for raw in blocks:
            b = tuple(sorted(raw))
            if not b:
                raise BadPartition("empty block")
            canon.append(b)
        canon.sort(key=lambda b: b[0])
        seen = set()
        for b in canon:
            for x in b:
                if not isinstance(x, int) or x < 1 or x > n:
                    raise BadPartition(f"element {x!r} outside 1..{n}")
                if x in seen:
                    raise BadPartition(f"element {x} appears in two blocks")
                seen.add(x)
        if len(seen) != n:
            missing = sorted(set(range(1, n + 1)) - seen)
            raise BadPartition(f"elements {missing} are not covered")
        self.n = n
        self.blocks: tuple[tuple[int, ...], ...] = tuple(canon)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def shape(self) -> SizePartition:
        return SizePartition(len(b) for b in self.blocks)

    def __eq__(self, other):
        return (
            isinstance(other, SetPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return f"SetPartition({self.n}, {[list(b) for b in self.blocks]})"


class BipartiteTree:
    """Labelled tree on classes U = {u_0..u_a} and V = {v_0..v_b}.

    Edge (i, j) joins u_i to v_j; the a + b + 1 edges must form a spanning
    tree of the complete bipartite graph K_{a+1,b+1}.
    """

    def __init__(self, a: int, b: int, edges: Iterable[Sequence[int]]):
        if not isinstance(a, int) or not isinstance(b, int) or a < 0 or b < 0:
            raise NotBipartite(f"class sizes must be nonnegative integers, got a={a!r}, b={b!r}")
        canon = []
        for raw in edges:
            e = tuple(raw)
            if len(e) != 2 or any(not isinstance(x, int) for x in e):
                raise NotBipartite(f"edge {raw!r} is not a pair of integers")
            i, j = e
            if not (0 <= i <= a and 0 <= j <= b):
                raise NotBipartite(f"edge {list(e)} outside U x V for a={a}, b={b}")
            canon.append((i, j))
        canon.sort()
        for prev, cur in zip(canon, canon[1:]):
            if prev == cur:
                raise NotATree(f"duplicate edge {list(cur)}")
        if len(canon) != a + b + 1:
            raise NotATree(f"expected {a + b + 1} edges, got {len(canon)}")
        parent = list(range(a + b + 2))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in canon:
            ri, rj = find(i), find(a + 1 + j)
            if ri == rj:
                raise NotATree(f"edge {[i, j]} closes a cycle")
            parent[rj] = ri
        # a + b + 1 acyclic edges on a + b + 2 vertices are automatically
        # spanning and connected
        self.a = a
        self.b = b
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)

    def u_degrees(self) -> tuple[int, ...]:
        degs = [0] * (self.a + 1)
        for i, _ in self.edges:
            degs[i] += 1
        return tuple(degs)

    def v_degrees(self) -> tuple[int, ...]:
        degs = [0] * (self.b + 1)
        for _, j in self.edges:
            degs[j] += 1
        return tuple(degs)

    def __eq__(self, other):
        return (
            isinstance(other, BipartiteTree)
            and (self.a, self.b, self.edges) == (other.a, other.b, other.edges)
        )

    def __hash__(self):
        return hash((self.a, self.b, self.edges))

    def __repr__(self):
        return f"BipartiteTree(a={self.a}, b={self.b}, edges={[list(e) for e in self.edges]})"

    def to_json_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "BipartiteTree":
        try:
            a, b, edges = d["a"], d["b"], d["edges"]
        except (KeyError, TypeError) as exc:
            raise NotBipartite(f"expected keys 'a', 'b' and 'edges': {exc}") from exc
        return cls(a, b, edges)

    def dumps(self) -> str:
        return _json_compact(self.to_json_dict())
