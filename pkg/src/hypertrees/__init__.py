"""Exact counting, bijective codecs and uniform samplers for labelled
hypertrees and bipartite trees, certified by a brute-force oracle."""

from .bipartite import (
    BipartiteCode,
    decode_bipartite,
    degree_profile,
    encode_bipartite,
)
from .codec import HypertreeCode, decode, encode, partition_of
from .counting import (
    BigCount,
    Probability,
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
from .errors import (
    BadLength,
    BadPartition,
    BadWordLength,
    BoundExceeded,
    CycleOutsideEdge,
    Disconnected,
    DomainError,
    EdgeOverlap,
    EmptyTree,
    LetterOutOfRange,
    MalformedHypergraph,
    NonTreeCode,
    NonUniqueMarked,
    NotATree,
    NotBipartite,
    PartsMismatch,
    ProfileMismatch,
    SizeIdentityViolated,
)
from .model import (
    BipartiteTree,
    DegreeVector,
    Hypergraph,
    Hypertree,
    SetPartition,
    SizePartition,
    distance,
    marked_vertex,
    profile,
    validate_hypertree,
)
from .oracle import (
    EnumerationReport,
    bipartite_profile_census,
    enumerate_bipartite_trees,
    enumerate_hypertrees,
    enumerate_set_partitions,
    profile_census,
    weighted_census,
)
from .rng import SplitMix64
from .sampling import (
    sample_bipartite_tree,
    sample_hypertree,
    sample_hypertree_uniform,
    sample_set_partition,
    sample_word,
)
from .selftest import run_selftest

__version__ = "0.1.0"
