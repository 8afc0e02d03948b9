"""Pinned random streams: PCG32 (XSH-RR 64/32) with SplitMix64 seed expansion.

All arithmetic runs on numpy ``uint64`` arrays, so a batch of independent
substreams advances in lockstep and results never depend on how the batch is
split across workers. The generator is specified bit-exactly:

* ``SM(s, k)`` is the k-th (0-based) output of SplitMix64 seeded with ``s``.
* Substream ``i`` of master seed ``s`` is ``pcg32_srandom(SM(s, 2i), SM(s, 2i+1))``.
* ``next_u32`` is the reference pcg32 XSH-RR output function.
* ``bounded(m)`` is ``(u32 * m) >> 32``.
"""
import logging
from typing import Union

import numpy as np

logger = logging.getLogger(__name__)

U64 = np.uint64
MASK32 = U64(0xFFFFFFFF)
PCG_MULT = U64(6364136223846793005)
GOLDEN_GAMMA = U64(0x9E3779B97F4A7C15)
_SM_MUL1 = U64(0xBF58476D1CE4E5B9)
_SM_MUL2 = U64(0x94D049BB133111EB)
_TWO_32 = 2 ** 32

IntArray = Union[int, np.ndarray]


def _as_u64(values: IntArray) -> np.ndarray:
    return np.atleast_1d(np.asarray(values, dtype=U64))


def mix64(z: np.ndarray) -> np.ndarray:
    """SplitMix64 output finalizer."""
    z = (z ^ (z >> U64(30))) * _SM_MUL1
    z = (z ^ (z >> U64(27))) * _SM_MUL2
    return z ^ (z >> U64(31))


def splitmix64(seed: int, k: IntArray) -> np.ndarray:
    """k-th output (0-based) of a SplitMix64 generator seeded with ``seed``."""
    if not 0 <= seed < 2 ** 64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    counters = _as_u64(k) + U64(1)
    return mix64(U64(seed) + counters * GOLDEN_GAMMA)


class Pcg32Streams:
    """A batch of independent PCG32 generators advancing together."""

    def __init__(self, initstate: IntArray, initseq: IntArray):
        initstate = _as_u64(initstate)
        initseq = _as_u64(initseq)
        if initstate.shape != initseq.shape:
            raise ValueError("initstate and initseq must have the same shape")
        self._inc = (initseq << U64(1)) | U64(1)
        self._state = np.zeros_like(initstate)
        self._step()
        self._state = self._state + initstate
        self._step()

    @classmethod
    def substreams(cls, seed: int, indices: IntArray) -> "Pcg32Streams":
        """Substreams ``mix(seed, i)`` for every index in ``indices``."""
        idx = _as_u64(indices)
        return cls(splitmix64(seed, U64(2) * idx), splitmix64(seed, U64(2) * idx + U64(1)))

    @classmethod
    def single(cls, seed: int, index: int = 0) -> "Pcg32Streams":
        return cls.substreams(seed, [index])

    def __len__(self) -> int:
        return int(self._state.shape[0])

    def _step(self) -> None:
        self._state = self._state * PCG_MULT + self._inc

    def next_u32(self) -> np.ndarray:
        """One 32-bit output per stream (as uint64 values below 2**32)."""
        old = self._state
        self._step()
        xorshifted = (((old >> U64(18)) ^ old) >> U64(27)) & MASK32
        rot = old >> U64(59)
        return ((xorshifted >> rot) | (xorshifted << ((U64(32) - rot) & U64(31)))) & MASK32

    def bounded(self, bound: IntArray) -> np.ndarray:
        """Integers in ``[0, bound)`` via multiply-shift; ``bound`` must fit in 32 bits."""
        return (self.next_u32() * _as_u64(bound)) >> U64(32)

    def bernoulli(self, p: float) -> np.ndarray:
        """Boolean draws with probability ``floor(p * 2**32) / 2**32``."""
        threshold = U64(int(p * _TWO_32))
        return self.next_u32() < threshold

    def shuffled_indices(self, n: int) -> np.ndarray:
        """One Fisher-Yates shuffle of ``range(n)`` per stream, shape ``(len(self), n)``."""
        m = len(self)
        perms = np.tile(np.arange(n, dtype=np.intp), (m, 1))
        rows = np.arange(m)
        for i in range(n - 1, 0, -1):
            j = self.bounded(i + 1).astype(np.intp)
            swapped = perms[rows, j]
            perms[rows, j] = perms[rows, i]
            perms[rows, i] = swapped
        return perms
