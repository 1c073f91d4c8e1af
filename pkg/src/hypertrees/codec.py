"""Bijective codec between hypertrees and (set partition, word) pairs.

A hypertree with k hyperedges on vertices {0..n} maps to

* the partition of {1..n} whose blocks are the hyperedges with their marked
  vertex (the vertex closest to 0) deleted, and
* a word of length k - 1 over the alphabet {0..n} in which letter i appears
  deg(i) - 1 times.

The pair determines the hypertree uniquely and every (partition, word) pair
arises, so encoding and decoding are mutually inverse total maps.
"""

from __future__ import annotations

import json

from .errors import BadPartition, BadWordLength, EmptyTree, LetterOutOfRange
from .model import Hypergraph, Hypertree, SetPartition, _json_compact

CodeWord = tuple  # letters in {0..n}, length k - 1


class HypertreeCode:
    """A set partition of {1..n} together with a word of length k - 1."""

    def __init__(self, partition: SetPartition, word):
        w = tuple(word)
        if len(w) != partition.k - 1:
            raise BadWordLength(
                f"word length {len(w)} but partition has {partition.k} blocks"
            )
        for letter in w:
            if not isinstance(letter, int) or letter < 0 or letter > partition.n:
                raise LetterOutOfRange(f"letter {letter!r} outside 0..{partition.n}")
        self.partition = partition
        self.word: CodeWord = w

    @property
    def n(self) -> int:
        return self.partition.n

    def __eq__(self, other):
        return (
            isinstance(other, HypertreeCode)
            and self.partition == other.partition
            and self.word == other.word
        )

    def __hash__(self):
        return hash((self.partition, self.word))

    def __repr__(self):
        return f"HypertreeCode({self.partition!r}, word={list(self.word)})"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "partition": [list(b) for b in self.partition.blocks],
            "word": list(self.word),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "HypertreeCode":
        try:
            n, partition, word = d["n"], d["partition"], d["word"]
        except (KeyError, TypeError) as exc:
            raise BadPartition(f"expected keys 'n', 'partition' and 'word': {exc}") from exc
        return cls(SetPartition(n, partition), word)

    def dumps(self) -> str:
        return _json_compact(self.to_json_dict())


def partition_of(tree: Hypertree) -> SetPartition:
    """Partition of {1..n}: each hyperedge minus its marked vertex."""
    if tree.k == 0:
        raise EmptyTree("hypertree with no hyperedges has no partition")
    blocks = []
    for e, m in zip(tree.edges, tree.marks):
        blocks.append([v for v in e if v != m])
    return SetPartition(tree.n, blocks)


def encode(tree: Hypertree) -> HypertreeCode:
    """Encode a hypertree as its (partition, word) code.

    The word is produced iteratively.  While some vertex a >= 1 still marks
    a hyperedge, take the largest such a; among the current blocks other
    than the one containing a, ordered by minimum element, those whose
    hyperedge is marked at a give the positions of the letter a.  The
    hyperedges around a are then merged into one (keeping the mark of the
    block containing a), which is exactly the hypertree with those letters
    removed from its word.  Positions never written keep the letter 0: a
    hypertree whose hyperedges all contain 0 has the all-zero word.
    """
    k = tree.k
    if k == 0:
        raise EmptyTree("hypertree with no hyperedges cannot be encoded")
    word = [0] * (k - 1)
    blocks = [
        (frozenset(e) - {m}, m) for e, m in zip(tree.edges, tree.marks)
    ]
    partition = SetPartition(tree.n, [sorted(fs) for fs, _ in blocks])

    slots = list(range(k - 1))  # word positions not yet assigned
    while True:
        a = max(m for _, m in blocks)
        if a == 0:
            break
        pa_idx = next(i for i, (fs, _) in enumerate(blocks) if a in fs)
        pa_fs, pa_mark = blocks[pa_idx]
        others = sorted(
            (blk for i, blk in enumerate(blocks) if i != pa_idx),
            key=lambda blk: min(blk[0]),
        )
        merged = set(pa_fs)
        kept = []
        kept_slots = []
        for pos, (fs, m) in enumerate(others):
            if m == a:
                word[slots[pos]] = a
                merged |= fs
            else:
                kept.append((fs, m))
                kept_slots.append(slots[pos])
        blocks = kept + [(frozenset(merged), pa_mark)]
        slots = kept_slots
    return HypertreeCode(partition, word)


def decode(code: HypertreeCode, n: int | None = None, *, check: bool = False) -> Hypertree:
    """Rebuild the unique hypertree whose code is the given pair.

    Peels the word from its largest letter downward, recording at each step
    which blocks merge, then unwinds: the merged block's hyperedge donates
    its marked vertex to the block containing a, while the selected blocks
    become hyperedges marked at a.  With ``check=True`` the result is
    re-validated from scratch (test builds only; decoded output is valid by
    construction).
    """
    partition = code.partition
    if n is not None and n != partition.n:
        raise BadPartition(f"partition covers 1..{partition.n}, expected 1..{n}")
    n = partition.n
    if partition.k == 0:
        raise BadPartition("partition has no blocks")

    cur_blocks = [frozenset(b) for b in partition.blocks]
    cur_word = list(code.word)
    frames = []
    while cur_word and max(cur_word) > 0:
        a = max(cur_word)
        pa_idx = next(i for i, fs in enumerate(cur_blocks) if a in fs)
        pa = cur_blocks[pa_idx]
        others = sorted(
            (fs for i, fs in enumerate(cur_blocks) if i != pa_idx), key=min
        )
        chosen = []
        merged = set(pa)
        kept = []
        kept_word = []
        for pos, fs in enumerate(others):
            if cur_word[pos] == a:
                chosen.append(fs)
                merged |= fs
            else:
                kept.append(fs)
                kept_word.append(cur_word[pos])
        merged_fs = frozenset(merged)
        frames.append((a, pa, chosen, merged_fs))
        cur_blocks = kept + [merged_fs]
        cur_word = kept_word

    # all-zero residual word: hyperedges are the blocks with 0 adjoined
    mark_of = {fs: 0 for fs in cur_blocks}
    for a, pa, chosen, merged_fs in reversed(frames):
        m = mark_of.pop(merged_fs)
        for fs in chosen:
            mark_of[fs] = a
        mark_of[pa] = m

    pairs = sorted((tuple(sorted(fs | {m})), m) for fs, m in mark_of.items())
    graph = Hypergraph(n, [e for e, _ in pairs])
    tree = Hypertree._trusted(graph, tuple(m for _, m in pairs))
    if check:
        revalidated = Hypertree(graph)
        assert revalidated.marks == tree.marks, "decoded marks disagree with BFS marks"
    return tree


def loads_code(text: str) -> HypertreeCode:
    """Parse the JSON code format {"n":..,"partition":[[..],..],"word":[..]}."""
    return HypertreeCode.from_json_dict(json.loads(text))
