"""PCG32 (O'Neill's pcg32_random_r) for the Gibbs sampler.

The compiled kernel and the NumPy fallback both implement this exact
generator, so a fit is bit-identical regardless of backend and platform.
Everything outside the sampler uses NumPy's seeded PCG64 Generator.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_MULT = 6364136223846793005
DEFAULT_STREAM = 54


class Pcg32:
    __slots__ = ("state", "inc")

    def __init__(self, seed: int, stream: int = DEFAULT_STREAM):
        self.state = 0
        self.inc = ((stream << 1) | 1) & _MASK64
        self.next_uint32()
        self.state = (self.state + seed) & _MASK64
        self.next_uint32()

    @classmethod
    def from_state(cls, arr: np.ndarray) -> "Pcg32":
        rng = cls.__new__(cls)
        rng.state = int(arr[0])
        rng.inc = int(arr[1])
        return rng

    def state_array(self) -> np.ndarray:
        return np.array([self.state, self.inc], dtype=np.uint64)

    def next_uint32(self) -> int:
        old = self.state
        self.state = (old * _MULT + self.inc) & _MASK64
        xorshifted = (((old >> 18) ^ old) >> 27) & 0xFFFFFFFF
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & 0xFFFFFFFF

    def next_double(self) -> float:
        """Uniform in [0, 1) with 32 bits of resolution."""
        return self.next_uint32() * 2.0 ** -32

    def next_below(self, n: int) -> int:
        """Uniform integer in [0, n) by modulo (bias negligible for small n)."""
        return self.next_uint32() % n
