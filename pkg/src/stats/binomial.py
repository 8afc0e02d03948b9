from dataclasses import dataclass
from fractions import Fraction
from math import comb

from errors import BadParameter

MAX_TRIALS = 10000


@dataclass(frozen=True)
class BinomialTail:
    """Exact fair-coin tail ``numerator / 2**n``; ``upper`` is P(X >= k), otherwise P(X < k)."""
    k: int
    n: int
    numerator: int
    denominator: int
    p_float: float
    upper: bool = True

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator} ≈ {self.p_float:.4f}"


def _check(k: int, n: int) -> None:
    if not 0 <= n <= MAX_TRIALS:
        raise BadParameter(f"n must lie in [0, {MAX_TRIALS}], got {n}")
    if not 0 <= k <= n:
        raise BadParameter(f"k must lie in [0, n={n}], got {k}")


def _tail(k: int, n: int, numerator: int, upper: bool) -> BinomialTail:
    denominator = 2 ** n
    # int / int is correctly rounded
    return BinomialTail(k=k, n=n, numerator=numerator, denominator=denominator,
                        p_float=numerator / denominator, upper=upper)


def binom_tail(k: int, n: int) -> BinomialTail:
    """P(X >= k) for X ~ Binomial(n, 1/2)."""
    _check(k, n)
    return _tail(k, n, sum(comb(n, i) for i in range(k, n + 1)), upper=True)


def binom_tail_strictly_below(k: int, n: int) -> BinomialTail:
    """P(X < k), the exact complement of :func:`binom_tail`."""
    _check(k, n)
    return _tail(k, n, sum(comb(n, i) for i in range(k)), upper=False)
