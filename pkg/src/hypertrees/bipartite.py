"""Codec between labelled bipartite trees and word pairs in V^a x U^b.

A spanning tree of K_{a+1,b+1} rooted at u_0 maps to (W, W'), where W lists
the parents of u_1..u_a (vertices of V) and W' places, for c = a down to 1,
the letters u_c at positions determined by the ranks of u_c's child subtrees
among the rooted components of a shrinking forest.  Letter v_i appears
deg(v_i) - 1 times in W and letter u_i appears deg(u_i) - 1 times in W', so
the codec is degree-faithful, and it is a bijection onto all word pairs.
"""

from __future__ import annotations

import json
from collections import deque

from ._dsu import DisjointSets
from .errors import BadLength, LetterOutOfRange, NonTreeCode, NotATree
from .model import BipartiteTree, _json_compact


class BipartiteCode:
    """Word pair (w, wprime) with w over V-labels 0..b and wprime over U-labels 0..a."""

    def __init__(self, a: int, b: int, w, wprime):
        w = tuple(w)
        wp = tuple(wprime)
        if a < 0 or b < 0:
            raise BadLength(f"class sizes must be nonnegative, got a={a}, b={b}")
        if len(w) != a:
            raise BadLength(f"w has length {len(w)}, expected a={a}")
        if len(wp) != b:
            raise BadLength(f"wprime has length {len(wp)}, expected b={b}")
        for letter in w:
            if not isinstance(letter, int) or letter < 0 or letter > b:
                raise LetterOutOfRange(f"w letter {letter!r} outside 0..{b}")
        for letter in wp:
            if not isinstance(letter, int) or letter < 0 or letter > a:
                raise LetterOutOfRange(f"wprime letter {letter!r} outside 0..{a}")
        self.a = a
        self.b = b
        self.w = w
        self.wprime = wp

    def __eq__(self, other):
        return isinstance(other, BipartiteCode) and (
            (self.a, self.b, self.w, self.wprime)
            == (other.a, other.b, other.w, other.wprime)
        )

    def __hash__(self):
        return hash((self.a, self.b, self.w, self.wprime))

    def __repr__(self):
        return f"BipartiteCode(a={self.a}, b={self.b}, w={list(self.w)}, wprime={list(self.wprime)})"

    def to_json_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "w": list(self.w), "wprime": list(self.wprime)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "BipartiteCode":
        try:
            return cls(d["a"], d["b"], d["w"], d["wprime"])
        except (KeyError, TypeError) as exc:
            raise BadLength(f"expected keys 'a', 'b', 'w' and 'wprime': {exc}") from exc

    def dumps(self) -> str:
        return _json_compact(self.to_json_dict())


def degree_profile(tree: BipartiteTree) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(alpha, beta) with alpha_i = deg(u_i) - 1 and beta_j = deg(v_j) - 1."""
    alpha = tuple(d - 1 for d in tree.u_degrees())
    beta = tuple(d - 1 for d in tree.v_degrees())
    return alpha, beta


def _parents(tree: BipartiteTree) -> list:
    """Parent of every vertex when the tree is rooted at u_0.

    Nodes are numbered 0..a for U and a+1..a+b+1 for V; the root's parent
    is None.
    """
    a, b = tree.a, tree.b
    size = a + b + 2
    adj: list[list[int]] = [[] for _ in range(size)]
    for i, j in tree.edges:
        adj[i].append(a + 1 + j)
        adj[a + 1 + j].append(i)
    parent: list = [None] * size
    seen = [False] * size
    seen[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                queue.append(y)
    return parent


def _forest_components(a, b, w, children_u, c):
    """Union-find over the forest known at step c.

    The forest consists of every edge touching u_{c+1}..u_a plus the parent
    edges of u_1..u_c.  u_0 stays isolated.
    """
    dsu = DisjointSets(a + b + 2)
    for i in range(c + 1, a + 1):
        dsu.union(i, a + 1 + w[i - 1])
        for j in children_u[i]:
            dsu.union(i, a + 1 + j)
    for i in range(1, c + 1):
        dsu.union(i, a + 1 + w[i - 1])
    return dsu


def encode_bipartite(tree: BipartiteTree) -> BipartiteCode:
    """Encode a bipartite tree as its word pair."""
    a, b = tree.a, tree.b
    parent = _parents(tree)
    w = tuple(parent[i] - (a + 1) for i in range(1, a + 1))
    children_u: list[list[int]] = [[] for _ in range(a + 1)]
    for j in range(b + 1):
        children_u[parent[a + 1 + j]].append(j)

    wprime = [0] * b
    slots = list(range(b))  # positions of wprime not yet assigned
    for c in range(a, 0, -1):
        kids = children_u[c]
        if not kids:
            continue
        dsu = _forest_components(a, b, w, children_u, c)
        comp_uc = dsu.find(c)
        # component roots: V-vertices whose parent edge is absent from the
        # forest, i.e. whose parent lies in {u_0..u_c}; drop those sharing
        # u_c's component
        avail = [
            j
            for j in range(b + 1)
            if parent[a + 1 + j] <= c and dsu.find(a + 1 + j) != comp_uc
        ]
        rank = {j: r for r, j in enumerate(avail)}
        used = sorted(rank[j] for j in kids)
        for r in used:
            wprime[slots[r]] = c
        used_set = set(used)
        slots = [s for idx, s in enumerate(slots) if idx not in used_set]
    # remaining positions keep letter 0 (copies of u_0)
    return BipartiteCode(a, b, w, wprime)


def decode_bipartite(
    code: BipartiteCode, a: int | None = None, b: int | None = None
) -> BipartiteTree:
    """Rebuild the unique bipartite tree with the given word pair."""
    if a is not None and a != code.a:
        raise BadLength(f"code has a={code.a}, expected {a}")
    if b is not None and b != code.b:
        raise BadLength(f"code has b={code.b}, expected {b}")
    a, b = code.a, code.b
    w, wp = code.w, code.wprime

    children_u: list[list[int]] = [[] for _ in range(a + 1)]
    for c in range(a, 0, -1):
        positions = [p for p, letter in enumerate(wp) if letter == c]
        if not positions:
            continue
        dsu = _forest_components(a, b, w, children_u, c)
        comp_uc = dsu.find(c)
        claimed = {j for i in range(c + 1, a + 1) for j in children_u[i]}
        avail = [
            j
            for j in range(b + 1)
            if j not in claimed and dsu.find(a + 1 + j) != comp_uc
        ]
        open_slots = [p for p, letter in enumerate(wp) if letter <= c]
        pos_rank = {p: r for r, p in enumerate(open_slots)}
        for p in positions:
            r = pos_rank[p]
            if r >= len(avail):
                # impossible for in-range codes; guards corrupted state
                raise NonTreeCode(f"letter at position {p} selects a missing component")
            children_u[c].append(avail[r])

    claimed = {j for i in range(1, a + 1) for j in children_u[i]}
    edges = [(i, w[i - 1]) for i in range(1, a + 1)]
    edges += [(i, j) for i in range(1, a + 1) for j in children_u[i]]
    edges += [(0, j) for j in range(b + 1) if j not in claimed]
    try:
        return BipartiteTree(a, b, edges)
    except NotATree as exc:
        raise NonTreeCode(str(exc)) from exc


def loads_bipartite_code(text: str) -> BipartiteCode:
    """Parse the JSON code format {"a":..,"b":..,"w":[..],"wprime":[..]}."""
    return BipartiteCode.from_json_dict(json.loads(text))
