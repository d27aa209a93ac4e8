"""Portable seeded generator.

All randomness in the package comes from this generator so that every
sampled instance can be regenerated bit-for-bit in any language:

* state: unsigned 64-bit integer, initialised to ``seed mod 2**64``;
* step: ``state = (6364136223846793005 * state + 1442695040888963407) mod 2**64``
  (Knuth's MMIX linear congruential constants);
* ``next_u32``: step, then return ``state >> 32``;
* ``randint(lo, hi)``: span ``s = hi - lo + 1``; for ``s <= 2**32`` draw
  ``x = next_u32()`` until ``x < 2**32 - (2**32 mod s)``, return ``lo + x mod s``;
  larger spans concatenate ``ceil(bits/32)`` draws (first draw most
  significant) and reject against the same kind of limit.
"""

from __future__ import annotations

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK64 = (1 << 64) - 1


class SeededRng:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u32(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK64
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` inclusive."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        words = max(1, -(-(span - 1).bit_length() // 32))
        full = 1 << (32 * words)
        limit = full - full % span
        while True:
            x = 0
            for _ in range(words):
                x = (x << 32) | self.next_u32()
            if x < limit:
                return lo + x % span

    def nonzero(self, lo: int, hi: int) -> int:
        while True:
            x = self.randint(lo, hi)
            if x:
                return x

    def vector(self, n: int, lo: int, hi: int) -> list[int]:
        return [self.randint(lo, hi) for _ in range(n)]

    def sample_distinct(self, k: int, lo: int, hi: int) -> list[int]:
        seen: list[int] = []
        while len(seen) < k:
            x = self.randint(lo, hi)
            if x not in seen:
                seen.append(x)
        return seen


def derive_seed(seed: int, *labels: int) -> int:
    """Deterministic sub-seed for the ``labels``-th attempt/trial of ``seed``."""
    rng = SeededRng(seed)
    for label in labels:
        rng.state ^= (label * 0x9E3779B97F4A7C15) & MASK64
        rng.next_u32()
    return rng.state
