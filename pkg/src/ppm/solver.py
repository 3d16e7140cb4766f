"""Counting and detection by summation over an anchored decomposition family.

The family is indexed by increasing maps from the even pattern positions
to the even text positions. Each map pins every even pattern position
into a two-wide window starting at its (even) anchor, and the odd
positions get the stretches in between, so each family member is a valid
segment decomposition. Every occurrence respects exactly one member: the
one whose anchors are the occurrence's even-position text positions
rounded down to even. Summing the confined counts over the family
therefore counts each occurrence once.

The family has binom(n//2, k//2) <= 2^(n/2) members and each confined
count costs O(n), which gives the O(n * 2^(n/2)) total with O(n) memory:
the family is streamed, never materialized.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from . import dp
from .core import (
    Embedding,
    InstanceTooLarge,
    InstanceTooSmall,
    LengthMismatch,
    OrderViolation,
    OutOfRange,
    PpmInstance,
    SegmentDecomposition,
)


@dataclass(frozen=True)
class EvenGuess:
    """Anchors for the even pattern positions.

    ``values[i-1]`` is the anchor of pattern position 2i: an even text
    position, strictly increasing in i. The empty guess is the single
    choice for patterns of length at most 1.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.values, tuple):
            object.__setattr__(self, "values", tuple(self.values))
        prev = 0
        for v in self.values:
            if v < 2 or v % 2:
                raise OutOfRange(f"anchor {v} is not an even position >= 2")
            if v <= prev:
                raise OrderViolation(f"anchors not strictly increasing: {prev} then {v}")
            prev = v


def c_floor(i: int) -> int:
    """Largest even integer at most i, for i >= 1.

    >>> c_floor(5), c_floor(4), c_floor(1)
    (4, 4, 0)
    """
    if i < 1:
        raise OutOfRange(f"expected a positive integer, got {i}")
    return 2 * (i // 2)


def decomposition_of_guess(g: EvenGuess, n: int, k: int) -> SegmentDecomposition:
    """The segment decomposition induced by even-position anchors.

    Even position 2i gets the window [g_i, min(n, g_i + 1)]; each odd
    position stretches from the right end of its left neighbour to the
    left end of its right neighbour; position 1 starts at 1 and, for odd
    k, position k runs to n. Always passes validate_decomposition.
    """
    if not 1 <= k <= n:
        raise InstanceTooSmall(f"need 1 <= k <= n, got k={k}, n={n}")
    if len(g.values) != k // 2:
        raise LengthMismatch(f"expected {k // 2} anchors for k={k}, got {len(g.values)}")
    if g.values and g.values[-1] > 2 * (n // 2):
        raise OutOfRange(f"anchor {g.values[-1]} beyond last even position of [1, {n}]")
    lo = [0] * (k + 1)
    hi = [0] * (k + 1)
    lo[1] = 1
    for i, anchor in enumerate(g.values, start=1):
        e = 2 * i
        lo[e] = anchor
        hi[e] = anchor + 1 if anchor < n else n
        hi[e - 1] = anchor
        if e + 1 <= k:
            lo[e + 1] = hi[e]
    if k % 2:
        hi[k] = n
    return SegmentDecomposition(tuple((lo[i], hi[i]) for i in range(1, k + 1)), n)


def enumerate_guesses(n: int, k: int) -> Iterator[EvenGuess]:
    """Stream every anchor choice in lexicographic order of its values.

    Exactly binom(n//2, k//2) guesses, generated with O(n) working memory.
    """
    if not 1 <= k <= n:
        raise InstanceTooSmall(f"need 1 <= k <= n, got k={k}, n={n}")
    evens = range(2, 2 * (n // 2) + 1, 2)
    return (EvenGuess(combo) for combo in combinations(evens, k // 2))


def family_size(n: int, k: int) -> int:
    """Number of anchor choices for an (n, k) instance."""
    if not 1 <= k <= n:
        raise InstanceTooSmall(f"need 1 <= k <= n, got k={k}, n={n}")
    return math.comb(n // 2, k // 2)


def canonical_decomposition(f: Embedding, n: int) -> SegmentDecomposition:
    """The unique family member respected by the occurrence f.

    Anchors each even pattern position at its text position rounded down
    to even; any other member's window misses some f(2i) by at least one.
    """
    k = len(f.values)
    if f.values[-1] > n:
        raise OutOfRange(f"position {f.values[-1]} beyond text length {n}")
    g = EvenGuess(tuple(c_floor(f.values[e - 1]) for e in range(2, k + 1, 2)))
    return decomposition_of_guess(g, n, k)


def count_ppm(instance: PpmInstance, threads: int = 1) -> int:
    """Total number of occurrences of the pattern in the text.

    Sums the confined counts over the whole anchor family. With
    threads > 1 the family is split into contiguous lexicographic rank
    blocks, one worker each with its own scratch, and the exact partial
    sums are added in block order; the result is identical to the
    sequential one.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    n, k = instance.n, instance.k
    if threads == 1:
        total = 0
        for g in enumerate_guesses(n, k):
            total += dp.count_respecting(instance, decomposition_of_guess(g, n, k))
        return total
    bounds = _block_bounds(family_size(n, k), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = [pool.submit(_count_block, instance, start, stop) for start, stop in bounds]
        return sum(part.result() for part in parts)


def detect_ppm(instance: PpmInstance) -> bool:
    """Whether the pattern occurs at all.

    Short-circuits: returns True at the first family member with a
    nonzero confined count.
    """
    n, k = instance.n, instance.k
    for g in enumerate_guesses(n, k):
        if dp.count_respecting(instance, decomposition_of_guess(g, n, k)) > 0:
            return True
    return False


LOWERBOUND_CAP = 24


def lowerbound_family(n: int, k: int) -> set[SegmentDecomposition]:
    """Distinct family members forced by a structured set of occurrences.

    For every increasing map of 1..k//2 into 1..(n-1)//2, build the
    embedding that walks the chosen odd/even position pairs (appending n
    when k is odd) and take its canonical decomposition. Distinct maps
    force distinct members, so the result has binom((n-1)//2, k//2)
    elements. Self-test machinery, capped at small n; not part of the
    solving API.
    """
    if not 1 <= k <= n:
        raise InstanceTooSmall(f"need 1 <= k <= n, got k={k}, n={n}")
    half_k = k // 2
    half_n = (n - 1) // 2
    if half_k > half_n:
        raise InstanceTooSmall(f"need k//2 <= (n-1)//2, got k={k}, n={n}")
    if n > LOWERBOUND_CAP:
        raise InstanceTooLarge(f"materializing the family is capped at n={LOWERBOUND_CAP}")
    out: set[SegmentDecomposition] = set()
    for choice in combinations(range(1, half_n + 1), half_k):
        values = [0] * k
        for i, c in enumerate(choice, start=1):
            values[2 * i - 2] = 2 * c - 1
            values[2 * i - 1] = 2 * c
        if k % 2:
            values[-1] = n
        out.add(canonical_decomposition(Embedding(tuple(values)), n))
    return out


def _block_bounds(size: int, blocks: int) -> list[tuple[int, int]]:
    """Split range(size) into `blocks` contiguous near-equal rank ranges."""
    q, rem = divmod(size, blocks)
    out = []
    start = 0
    for b in range(blocks):
        stop = start + q + (1 if b < rem else 0)
        out.append((start, stop))
        start = stop
    return out


def _count_block(instance: PpmInstance, start: int, stop: int) -> int:
    n, k = instance.n, instance.k
    total = 0
    for values in _guess_block_values(n, k, start, stop):
        d = decomposition_of_guess(EvenGuess(values), n, k)
        total += dp.count_respecting(instance, d)
    return total


def _guess_block_values(n: int, k: int, start: int, stop: int) -> Iterator[tuple[int, ...]]:
    """Anchor tuples whose lexicographic ranks lie in [start, stop)."""
    m = n // 2
    r = k // 2
    if start >= stop:
        return
    if r == 0:
        if start == 0:
            yield ()
        return
    idxs = _unrank_combination(start, m, r)
    remaining = stop - start
    while True:
        yield tuple(2 * (i + 1) for i in idxs)
        remaining -= 1
        if remaining == 0 or not _advance_combination(idxs, m):
            return


def _unrank_combination(rank: int, m: int, r: int) -> list[int]:
    """The r-subset of range(m) at lexicographic rank `rank`, as a list."""
    idxs = []
    c = 0
    for slot in range(r):
        while True:
            below = math.comb(m - c - 1, r - slot - 1)
            if rank < below:
                break
            rank -= below
            c += 1
        idxs.append(c)
        c += 1
    return idxs


def _advance_combination(idxs: list[int], m: int) -> bool:
    """Step an r-subset of range(m) to its lexicographic successor in place."""
    r = len(idxs)
    for i in range(r - 1, -1, -1):
        if idxs[i] != m - r + i:
            idxs[i] += 1
            for j in range(i + 1, r):
                idxs[j] = idxs[j - 1] + 1
            return True
    return False
