"""Seeded deterministic permutation generation.

The generator, the bounded-draw rejection scheme, and the shuffle order
are pinned bit for bit in docs/FORMAT.md so that independent
implementations produce identical permutations for identical (n, seed).
Pure integer arithmetic, no platform dependence.
"""

from __future__ import annotations

from .core import OutOfRange, Permutation

_MASK64 = (1 << 64) - 1
_INCREMENT = 0x9E3779B97F4A7C15
_MULT_A = 0xBF58476D1CE4E5B9
_MULT_B = 0x94D049BB133111EB


class SplitMix64:
    """64-bit generator: add a fixed odd increment, output the mixed state."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _INCREMENT) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MULT_A) & _MASK64
        z = ((z ^ (z >> 27)) * _MULT_B) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw from [0, bound), unbiased by rejection.

        Draws are rejected at or above the largest multiple of bound that
        fits in 64 bits, then reduced modulo bound.
        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = ((1 << 64) // bound) * bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


def random_permutation(n: int, seed: int) -> Permutation:
    """Uniformly random permutation of 1..n, deterministic per (n, seed).

    Shuffles [1..n] from the top down: for i = n-1 .. 1 (0-based), swap
    a[i] with a[j] for j drawn from [0, i].
    """
    if n < 1:
        raise OutOfRange(f"need n >= 1, got n={n}")
    rng = SplitMix64(seed)
    a = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        a[i], a[j] = a[j], a[i]
    return Permutation(tuple(a))
