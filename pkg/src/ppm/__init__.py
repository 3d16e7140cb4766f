"""Exact permutation pattern matching: counting and detection.

The main entry points are :func:`count_ppm` and :func:`detect_ppm`, which
run in O(n * 2^(n/2)) time and O(n) space. `brute_force_count` and
`bkm_count` provide two independent slower routes to the same numbers for
cross-validation and benchmarking.
"""

from .core import (
    DuplicateValues,
    Embedding,
    EmptyInput,
    EmptySegment,
    InstanceTooLarge,
    InstanceTooSmall,
    LengthMismatch,
    MalformedToken,
    NotAPermutation,
    OrderViolation,
    OutOfRange,
    Permutation,
    PpmError,
    PpmInstance,
    SegmentDecomposition,
    format_permutation,
    is_solution,
    parse_permutation,
    pattern_of,
    respects,
    validate_decomposition,
)
from .dp import DpStats, SegmentValues, count_respecting, segment_values
from .oracle import (
    OracleReport,
    bkm_count,
    brute_force_count,
    brute_force_enumerate,
    oracle_report,
)
from .rng import SplitMix64, random_permutation
from .solver import (
    EvenGuess,
    c_floor,
    canonical_decomposition,
    count_ppm,
    decomposition_of_guess,
    detect_ppm,
    enumerate_guesses,
    family_size,
)

__version__ = "0.1.0"

__all__ = [
    "DpStats",
    "DuplicateValues",
    "Embedding",
    "EmptyInput",
    "EmptySegment",
    "EvenGuess",
    "InstanceTooLarge",
    "InstanceTooSmall",
    "LengthMismatch",
    "MalformedToken",
    "NotAPermutation",
    "OracleReport",
    "OrderViolation",
    "OutOfRange",
    "Permutation",
    "PpmError",
    "PpmInstance",
    "SegmentDecomposition",
    "SegmentValues",
    "SplitMix64",
    "bkm_count",
    "brute_force_count",
    "brute_force_enumerate",
    "c_floor",
    "canonical_decomposition",
    "count_ppm",
    "count_respecting",
    "decomposition_of_guess",
    "detect_ppm",
    "enumerate_guesses",
    "family_size",
    "format_permutation",
    "is_solution",
    "oracle_report",
    "parse_permutation",
    "pattern_of",
    "random_permutation",
    "respects",
    "segment_values",
    "validate_decomposition",
]
