"""Deterministic pseudorandom stream used by every sampler in the package.

The generator is SplitMix64 (Steele, Lea & Flood's mixing constants) driven
by a 64-bit seed.  It is implemented here rather than taken from
``random.Random`` so that sampled structures are byte-identical across
platforms and Python implementations, which is part of the sampling
contract.  All derived draws (bounded integers, shuffles) are unbiased:
``randbelow`` uses rejection sampling and ``shuffle`` is Fisher-Yates.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream: seed in, reproducible 64-bit words out."""

    def __init__(self, seed: int = 0):
        self._state = seed & _MASK64

    def next64(self) -> int:
        """Next raw 64-bit word of the stream."""
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randbits(self, bits: int) -> int:
        """Uniform integer with the given number of bits (0 bits -> 0)."""
        if bits <= 0:
            return 0
        acc = 0
        filled = 0
        while filled < bits:
            acc |= self.next64() << filled
            filled += 64
        return acc & ((1 << bits) - 1)

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound); exact for arbitrary-size bounds."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        if bound == 1:
            return 0
        bits = (bound - 1).bit_length()
        while True:
            r = self.randbits(bits)
            if r < bound:
                return r

    def shuffle(self, xs: list) -> None:
        """In-place unbiased Fisher-Yates shuffle."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.randbelow(i + 1)
            xs[i], xs[j] = xs[j], xs[i]
