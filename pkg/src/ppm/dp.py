"""Linear-time counting of occurrences confined to a segment decomposition.

The counter places pattern values bottom-up. Level i stores, for each text
value j available on the segment of the pattern position that carries
value i, the number of ways to place the i smallest pattern values such
that every placed position sits inside its segment and visiting placed
positions in pattern-value order reads increasing text values. Level k
summed over j is the answer: any placement satisfying the value order and
the segment membership is automatically strictly increasing in position,
because consecutive segments overlap in at most one point and a repeated
position would repeat a text value.

Two facts make a run O(n) time and O(n) space:

* the per-segment value lists together hold at most n + k - 1 entries
  (the overlap-at-most-one rule), and they come out of one bucket pass
  over values 1..n already sorted;
* each level's prefix sums over the previous level are a two-list merge
  driven by a single forward cursor, so a level costs O(|prev| + |cur|).

Only two levels are materialized at any moment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    LengthMismatch,
    Permutation,
    PpmInstance,
    SegmentDecomposition,
    validate_decomposition,
)

# Sorted text values per segment, indexed by pattern position.
SegmentValues = tuple[tuple[int, ...], ...]


@dataclass
class DpStats:
    """Operation counters for counting runs, for linearity checks.

    ``cell_writes`` counts stored DP cells, ``cursor_advances`` counts
    forward steps of the merge cursor. Both accumulate across runs when
    the same object is passed repeatedly.
    """

    cell_writes: int = 0
    cursor_advances: int = 0

    @property
    def total(self) -> int:
        return self.cell_writes + self.cursor_advances


def segment_values(sigma: Permutation, d: SegmentDecomposition) -> SegmentValues:
    """Sorted text values on each segment, gathered with one bucket pass.

    Sweeping values 1..n in increasing order and appending each to the
    buckets of all segments covering its position leaves every bucket
    sorted without a comparison sort.
    """
    if d.n != len(sigma):
        raise LengthMismatch(f"decomposition is over [1, {d.n}], text has length {len(sigma)}")
    validate_decomposition(d)
    return tuple(tuple(b) for b in _segment_value_buckets(sigma, d.segments, len(sigma)))


def _segment_value_buckets(
    sigma: Permutation, segments: tuple[tuple[int, int], ...], n: int
) -> list[list[int]]:
    # The segments covering one position form a contiguous run of indices
    # (anything strictly between two coverers collapses to that point), so
    # first/last per position is enough.
    first = [-1] * (n + 1)
    last = [0] * (n + 1)
    for p, (lo, hi) in enumerate(segments):
        for pos in range(lo, hi + 1):
            if first[pos] < 0:
                first[pos] = p
            last[pos] = p
    buckets: list[list[int]] = [[] for _ in segments]
    inv = sigma.inverse_values
    for v in range(1, n + 1):
        pos = inv[v - 1]
        p0 = first[pos]
        if p0 < 0:
            continue
        for p in range(p0, last[pos] + 1):
            buckets[p].append(v)
    return buckets


def count_respecting(
    instance: PpmInstance, d: SegmentDecomposition, stats: DpStats | None = None
) -> int:
    """Exact number of occurrences that stay inside d's segments.

    Runs in O(n) time and space for any valid decomposition of the
    instance. Pass a :class:`DpStats` to record cell writes and cursor
    advances.
    """
    sigma = instance.sigma
    n = len(sigma)
    k = len(instance.pattern)
    if len(d.segments) != k:
        raise LengthMismatch(f"expected {k} segments, got {len(d.segments)}")
    if d.n != n:
        raise LengthMismatch(f"decomposition is over [1, {d.n}], text has length {n}")
    validate_decomposition(d)

    buckets = _segment_value_buckets(sigma, d.segments, n)
    # Sparsity guarantee: overlap at most one caps stored cells, sentinel included.
    assert sum(map(len, buckets)) + 1 <= n + k

    writes = 0
    advances = 0
    pinv = instance.pattern.inverse_values
    # Sentinel level: one way to place nothing, sitting below every text value.
    prev_j: list[int] = [0]
    prev_c: list[int] = [1]
    for i in range(k):
        vals = buckets[pinv[i] - 1]
        cur: list[int] = []
        append = cur.append
        acc = 0
        cursor = 0
        limit = len(prev_j)
        for j in vals:
            # Strictly-below prefix sum of the previous level; the cursor
            # never moves backwards because vals is increasing.
            while cursor < limit and prev_j[cursor] < j:
                acc += prev_c[cursor]
                cursor += 1
            append(acc)
        writes += len(vals)
        advances += cursor
        prev_j = vals
        prev_c = cur

    if stats is not None:
        stats.cell_writes += writes
        stats.cursor_advances += advances
    return sum(prev_c)
