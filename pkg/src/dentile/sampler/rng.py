"""SplitMix64, the generator behind every chain.

The same arithmetic is implemented three times (here, in the numpy
fallback kernel and in the compiled kernel) and the streams agree bit for
bit, so a seed reproduces a chain regardless of which kernel ran it.

Bounded draws use Lemire's multiply-shift on the top 32 bits with
rejection, which is exact for any bound below 2**32.
"""
from __future__ import annotations

ALGORITHM = "splitmix64"
MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
# odd constant used to separate the seeds of parallel chains
STREAM = 0xD1B54A32D192ED03


def mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if not 0 < bound < 1 << 32:
            raise ValueError(f"bound {bound} outside (0, 2**32)")
        m = (self.next() >> 32) * bound
        low = m & 0xFFFFFFFF
        if low < bound:
            threshold = ((1 << 32) - bound) % bound
            while low < threshold:
                m = (self.next() >> 32) * bound
                low = m & 0xFFFFFFFF
        return m >> 32


def chain_seed(seed: int, index: int) -> int:
    """Initial state of chain ``index`` in a batch started from ``seed``.

    Chain 0 keeps ``seed`` itself, so a batch of one equals a single chain.
    """
    if index == 0:
        return seed & MASK64
    return mix((seed ^ (index * STREAM)) & MASK64)
