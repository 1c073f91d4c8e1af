"""Exception classes for all domain-level failures.

Every error raised by the public API derives from :class:`DomainError`, so
callers (including the CLI) can distinguish bad inputs from programming bugs.
"""


class DomainError(Exception):
    """Base class for all structured domain errors."""


class MalformedHypergraph(DomainError):
    """Labels outside 0..n, edges smaller than two vertices, or duplicates."""


class EdgeOverlap(DomainError):
    """Two distinct hyperedges share two or more vertices."""


class CycleOutsideEdge(DomainError):
    """A cycle exists that is not contained in a single hyperedge."""


class Disconnected(DomainError):
    """Some vertex cannot be reached from vertex 0."""


class SizeIdentityViolated(DomainError):
    """Sum of hyperedge sizes differs from n + k on a supposed hypertree."""


class NonUniqueMarked(DomainError):
    """A hyperedge has several vertices at minimal distance to the root."""


class EmptyTree(DomainError):
    """Operation requires at least one hyperedge (k >= 1)."""


class BadPartition(DomainError):
    """Blocks do not form a partition of {1..n}."""


class BadWordLength(DomainError):
    """Code word length differs from (number of blocks) - 1."""


class LetterOutOfRange(DomainError):
    """Code word letter outside the allowed alphabet."""


class NotATree(DomainError):
    """Bipartite edge set is not a spanning tree (count, cycle or coverage)."""


class NotBipartite(DomainError):
    """Bipartite edge list malformed: bad arity or endpoint out of range."""


class BadLength(DomainError):
    """Bipartite code word lengths do not match the class sizes."""


class NonTreeCode(DomainError):
    """Bipartite decoding produced a non-tree; signals corrupted input."""


class PartsMismatch(DomainError):
    """Multinomial parts do not sum to the stated total."""


class ProfileMismatch(DomainError):
    """Size/degree profile inconsistent (wrong length, sum or sign)."""


class BoundExceeded(DomainError):
    """Brute-force enumeration requested above its configured bound."""
