"""Deterministic, portable 64-bit PRNG for reproducible experiments.

Implements splitmix64 (Steele, Lea, Flood: "Fast splittable pseudorandom
number generators", OOPSLA 2014). State advances by the golden-gamma constant
and each output is the mix of the new state, so identical seeds reproduce
identical streams on every platform and in any implementation language.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_STREAM_SALT = 0xD1B54A32D192ED03


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 stream with rejection-free-of-bias integer helpers."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return _mix(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), bias removed by rejection."""
        if n <= 0:
            raise ValueError(f"need a positive bound, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def sample(self, n: int, k: int) -> list[int]:
        """k distinct integers from range(n): first k steps of a Fisher-Yates shuffle."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} distinct values from range({n})")
        swapped: dict[int, int] = {}
        out = []
        for i in range(k):
            j = i + self.below(n - i)
            vj = swapped.get(j, j)
            swapped[j] = swapped.get(i, i)
            out.append(vj)
        return out

    def nonzero_symbol(self, q: int) -> int:
        """Uniform value in [1, q-1]: a uniformly random nonzero field element."""
        return 1 + self.below(q - 1)


def substream(seed: int, index: int) -> SplitMix64:
    """Independent per-round stream derived from (seed, index).

    The derivation is a fixed function of both inputs, so round i of a run is
    reproducible in isolation and rounds may execute in any order or in
    parallel without changing results.
    """
    return SplitMix64(_mix((seed ^ _mix(_STREAM_SALT ^ (index * _GAMMA))) & _MASK))
