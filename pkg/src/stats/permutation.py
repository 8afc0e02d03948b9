import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import List

import numpy as np

from errors import BadParameter, TooLargeForExhaustive
from metrics.correlation import VectorLike, as_vector, pearson
from prng import Pcg32Streams

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 8
# |r| comparisons are made with this slack so that alignments reproducing
# the observed correlation count as ties despite summation-order noise.
R_TOLERANCE = 1e-12


class PermutationMode(str, Enum):
    SAMPLED = "sampled"
    EXHAUSTIVE = "exhaustive"


class CountingRule(str, Enum):
    GREATER_OR_EQUAL = "greater_or_equal"
    STRICT_GREATER = "strict_greater"


@dataclass(frozen=True)
class PermutationResult:
    r_obs: float
    n_permutations: int
    count_exceeding: int
    p_value: float
    seed: int
    mode: PermutationMode
    counting_rule: CountingRule

    def to_dict(self) -> dict:
        return {
            "r_obs": self.r_obs,
            "n_permutations": self.n_permutations,
            "count_exceeding": self.count_exceeding,
            "p_value": self.p_value,
            "seed": self.seed,
            "mode": self.mode.value,
            "counting_rule": self.counting_rule.value,
        }


class _PermutedCorrelations:
    """|r| of a fixed ``a`` against row-permuted copies of ``b``."""

    def __init__(self, a: np.ndarray, b: np.ndarray):
        n = a.size
        self.da = a - math.fsum(a) / n
        self.db = b - math.fsum(b) / n
        # Both sums of squares are invariant under permutation of b.
        self.denominator = math.sqrt(math.fsum(self.da * self.da) * math.fsum(self.db * self.db))

    def abs_r(self, perms: np.ndarray) -> np.ndarray:
        return np.abs(self.db[perms] @ self.da) / self.denominator


def _count(abs_r: np.ndarray, threshold: float, rule: CountingRule) -> int:
    if rule is CountingRule.GREATER_OR_EQUAL:
        return int(np.count_nonzero(abs_r >= threshold - R_TOLERANCE))
    return int(np.count_nonzero(abs_r > threshold + R_TOLERANCE))


def permutation_test(
    a: VectorLike,
    b: VectorLike,
    n_permutations: int = 200,
    seed: int = 42,
    mode: PermutationMode = PermutationMode.SAMPLED,
    counting_rule: CountingRule = CountingRule.GREATER_OR_EQUAL,
    max_workers: int = 1,
    chunk_size: int = 4096,
) -> PermutationResult:
    """
    Two-tailed permutation test of pearson(a, b), holding ``a`` fixed.

    Sampled mode draws permutation ``i`` from PCG32 substream ``i`` of
    ``seed``, so the result does not depend on ``max_workers`` or
    ``chunk_size``. Exhaustive mode enumerates all n! alignments.
    """
    mode = PermutationMode(mode)
    counting_rule = CountingRule(counting_rule)
    r_obs = pearson(a, b).r
    x = as_vector(a)
    y = as_vector(b)
    n = x.size
    stats = _PermutedCorrelations(x, y)
    threshold = abs(r_obs)

    if mode is PermutationMode.EXHAUSTIVE:
        if n > EXHAUSTIVE_MAX_N:
            raise TooLargeForExhaustive(
                f"Exhaustive enumeration is capped at n={EXHAUSTIVE_MAX_N} ({math.factorial(EXHAUSTIVE_MAX_N)} "
                f"alignments); got n={n}"
            )
        perms = np.array(list(permutations(range(n))), dtype=np.intp)
        total = perms.shape[0]
        count = _count(stats.abs_r(perms), threshold, counting_rule)
    else:
        if n_permutations <= 0:
            raise BadParameter(f"n_permutations must be positive, got {n_permutations}")
        if max_workers < 1 or chunk_size < 1:
            raise BadParameter("max_workers and chunk_size must be positive")
        if not 0 <= seed < 2 ** 64:
            raise BadParameter(f"seed must be a 64-bit unsigned integer, got {seed}")
        total = n_permutations
        chunks = [np.arange(start, min(start + chunk_size, total), dtype=np.uint64)
                  for start in range(0, total, chunk_size)]

        def count_chunk(indices: np.ndarray) -> int:
            perms = Pcg32Streams.substreams(seed, indices).shuffled_indices(n)
            return _count(stats.abs_r(perms), threshold, counting_rule)

        if max_workers == 1 or len(chunks) == 1:
            counts: List[int] = [count_chunk(chunk) for chunk in chunks]
        else:
            with ThreadPoolExecutor(max_workers=max_workers) as executor:
                counts = list(executor.map(count_chunk, chunks))
        count = sum(counts)

    result = PermutationResult(
        r_obs=r_obs,
        n_permutations=total,
        count_exceeding=count,
        p_value=count / total,
        seed=seed,
        mode=mode,
        counting_rule=counting_rule,
    )
    logger.debug(f"Permutation test ({mode.value}, {counting_rule.value}): r={r_obs:.4f} "
                 f"count={count}/{total} p={result.p_value:.4f}")
    return result


def minimum_resolvable_p(n_permutations: int) -> float:
    """Smallest nonzero p a sampled test with ``n_permutations`` can report."""
    return 1.0 / n_permutations
