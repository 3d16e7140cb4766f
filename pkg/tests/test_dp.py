"""Confined counting: the linear-time layer-by-layer counter.

Claims checked here:
    - segment_values reads each segment's text values in sorted order
    - count_respecting equals filtering the exhaustive enumeration by
      respects, exhaustively at small n and on random pairs up to n = 12
    - the run stays linear: cell writes and cursor advances stay within
      the stated bounds and the cursor only moves forward
    - the result ignores text values outside the segments (re-ranking)
    - malformed decompositions are rejected with the documented errors
"""

import random
from itertools import permutations

import pytest

from ppm import oracle, solver
from ppm.core import (
    EmptySegment,
    LengthMismatch,
    Permutation,
    PpmInstance,
    SegmentDecomposition,
    respects,
)
from ppm.dp import DpStats, count_respecting, segment_values


def _inst(sigma, pattern):
    return PpmInstance(Permutation(tuple(sigma)), Permutation(tuple(pattern)))


def _random_instance(rng, n):
    k = rng.randint(1, n)
    sigma = list(range(1, n + 1))
    pat = list(range(1, k + 1))
    rng.shuffle(sigma)
    rng.shuffle(pat)
    return _inst(sigma, pat)


def _random_family_decomposition(rng, n, k):
    anchors = tuple(sorted(2 * c for c in rng.sample(range(1, n // 2 + 1), k // 2)))
    return solver.decomposition_of_guess(solver.EvenGuess(anchors), n, k)


def _oracle_count(inst, d):
    return sum(1 for f in oracle.brute_force_enumerate(inst) if respects(f, d))


# -- segment_values ----------------------------------------------------------


def test_segment_values_worked_example():
    sigma = Permutation((8, 1, 3, 9, 5, 4, 2, 7, 6))
    d = SegmentDecomposition(((1, 2), (2, 3), (3, 6), (6, 7), (7, 9)), 9)
    assert segment_values(sigma, d) == ((1, 8), (1, 3), (3, 4, 5, 9), (2, 4), (2, 6, 7))


def test_segment_values_trivial():
    assert segment_values(Permutation((1,)), SegmentDecomposition(((1, 1),), 1)) == ((1,),)
    assert segment_values(
        Permutation((2, 1)), SegmentDecomposition(((1, 1), (2, 2)), 2)
    ) == ((2,), (1,))


def test_segment_values_sorted_and_sized():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 14)
        k = rng.randint(1, n)
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        d = _random_family_decomposition(rng, n, k)
        vals = segment_values(Permutation(tuple(sigma)), d)
        assert sum(len(v) for v in vals) <= n + k - 1
        for (lo, hi), v in zip(d.segments, vals):
            assert list(v) == sorted(v)
            assert len(v) == hi - lo + 1


def test_segment_values_propagates_validation():
    with pytest.raises(EmptySegment):
        segment_values(Permutation((1, 2)), SegmentDecomposition(((2, 1),), 2))
    with pytest.raises(LengthMismatch):
        segment_values(Permutation((1, 2)), SegmentDecomposition(((1, 1),), 3))


# -- count_respecting: frozen vectors ----------------------------------------


def test_count_respecting_worked_example():
    inst = _inst((3, 2, 5, 4, 1), (1, 3, 2))
    d = SegmentDecomposition(((1, 2), (2, 4), (4, 5)), 5)
    assert count_respecting(inst, d) == 2
    assert _oracle_count(inst, d) == 2


def test_count_respecting_overlapping_segments_matches_oracle():
    inst = _inst((8, 1, 3, 9, 5, 4, 2, 7, 6), (5, 2, 3, 1, 4))
    d = SegmentDecomposition(((1, 2), (2, 3), (3, 6), (6, 7), (7, 9)), 9)
    got = count_respecting(inst, d)
    assert got == _oracle_count(inst, d)
    assert got >= 1  # the known occurrence (1, 3, 5, 7, 9) lands in these segments


def test_count_respecting_zero():
    inst = _inst((2, 1), (1, 2))
    assert count_respecting(inst, SegmentDecomposition(((1, 1), (2, 2)), 2)) == 0


def test_count_respecting_single_value_pattern():
    rng = random.Random(5)
    for n in (1, 2, 7, 11):
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        inst = _inst(sigma, (1,))
        assert count_respecting(inst, SegmentDecomposition(((1, n),), n)) == n


# -- count_respecting: oracle equivalence ------------------------------------


def test_matches_enumeration_exhaustively_small(perm_table):
    for n in range(1, 6):
        for k in range(1, n + 1):
            family = [
                solver.decomposition_of_guess(g, n, k)
                for g in solver.enumerate_guesses(n, k)
            ]
            for pat in perm_table[k]:
                for sig in perm_table[n]:
                    inst = PpmInstance(sig, pat)
                    sols = oracle.brute_force_enumerate(inst)
                    for d in family:
                        want = sum(1 for f in sols if respects(f, d))
                        assert count_respecting(inst, d) == want


def test_matches_enumeration_random_pairs():
    rng = random.Random(17)
    for _ in range(1000):
        n = rng.randint(2, 12)
        inst = _random_instance(rng, n)
        d = _random_family_decomposition(rng, n, inst.k)
        assert count_respecting(inst, d) == _oracle_count(inst, d)


def test_matches_enumeration_on_point_gap_decompositions():
    # The bkm-style segments exercise heavy point-segment overlap.
    rng = random.Random(19)
    checked = 0
    while checked < 300:
        n = rng.randint(2, 12)
        inst = _random_instance(rng, n)
        anchors = tuple(sorted(rng.sample(range(1, n + 1), inst.k // 2)))
        segs = oracle._bkm_segments(anchors, n, inst.k)
        if segs is None:
            continue
        d = SegmentDecomposition(segs, n)
        assert count_respecting(inst, d) == _oracle_count(inst, d)
        checked += 1


# -- linearity ---------------------------------------------------------------


def test_stats_stay_linear_random():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(2, 40)
        inst = _random_instance(rng, n)
        d = _random_family_decomposition(rng, n, inst.k)
        stats = DpStats()
        count_respecting(inst, d, stats=stats)
        assert stats.cell_writes <= n + inst.k - 1
        assert stats.cursor_advances <= n + inst.k - 1
        assert stats.total <= 2 * (n + inst.k)


def test_stats_accumulate_across_runs():
    inst = _inst((2, 1), (1,))
    d = SegmentDecomposition(((1, 2),), 2)
    stats = DpStats()
    count_respecting(inst, d, stats=stats)
    first = stats.total
    count_respecting(inst, d, stats=stats)
    assert stats.total == 2 * first


# -- independence from uncovered positions -----------------------------------


def test_result_ignores_uncovered_values():
    rng = random.Random(29)
    for _ in range(200):
        n = rng.randint(3, 12)
        inst = _random_instance(rng, n)
        d = _random_family_decomposition(rng, n, inst.k)
        covered = sorted({p for lo, hi in d.segments for p in range(lo, hi + 1)})

        reshuffled = list(range(1, n + 1))
        rng.shuffle(reshuffled)
        # Give covered positions fresh values that keep their relative order.
        by_old_value = sorted(covered, key=lambda p: inst.sigma(p))
        fresh = sorted(reshuffled[p - 1] for p in covered)
        for p, v in zip(by_old_value, fresh):
            reshuffled[p - 1] = v
        other = PpmInstance(Permutation(tuple(reshuffled)), inst.pattern)
        assert count_respecting(other, d) == count_respecting(inst, d)


# -- error handling ----------------------------------------------------------


def test_wrong_segment_count():
    inst = _inst((2, 1), (1, 2))
    with pytest.raises(LengthMismatch):
        count_respecting(inst, SegmentDecomposition(((1, 2),), 2))


def test_wrong_ambient_length():
    inst = _inst((2, 1), (1, 2))
    with pytest.raises(LengthMismatch):
        count_respecting(inst, SegmentDecomposition(((1, 1), (2, 2)), 3))


def test_invalid_decomposition_propagates():
    inst = _inst((2, 1), (1, 2))
    with pytest.raises(EmptySegment):
        count_respecting(inst, SegmentDecomposition(((2, 1), (2, 2)), 2))
