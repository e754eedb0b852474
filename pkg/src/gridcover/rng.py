"""Seedable, platform-independent 64-bit PRNG (SplitMix64).

Scenario generation must be reproducible bit-for-bit across platforms and
Python versions, so we use the SplitMix64 recurrence (Steele, Lea & Flood,
"Fast splittable pseudorandom number generators", OOPSLA 2014) instead of
``random.Random``.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """SplitMix64 output scrambler; bijective on 64-bit integers."""
    z = (x + _GAMMA) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 generator: state advances by the golden-ratio increment,
    output passes through :func:`mix64`."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return mix64(self._state)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), bias-free via rejection sampling."""
        if n <= 0:
            raise ValueError("randrange() requires n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        """Fisher-Yates, in place."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


def stream(seed: int, index: int) -> SplitMix64:
    """Decorrelated substream for (seed, index), e.g. one per trial."""
    return SplitMix64(mix64(seed & _MASK) ^ mix64(index & _MASK))
