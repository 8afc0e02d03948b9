from .permutation import (
    CountingRule,
    PermutationMode,
    PermutationResult,
    minimum_resolvable_p,
    permutation_test,
)
from .ttest import TTestResult, student_t_sf, t_test_p
from .binomial import BinomialTail, binom_tail, binom_tail_strictly_below

__all__ = [
    "CountingRule", "PermutationMode", "PermutationResult", "minimum_resolvable_p", "permutation_test",
    "TTestResult", "student_t_sf", "t_test_p",
    "BinomialTail", "binom_tail", "binom_tail_strictly_below",
]
