import logging
import math
from dataclasses import dataclass

from scipy.special import betainc

from errors import BadParameter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TTestResult:
    t: float
    df: int
    p_two_tailed: float
    # |r| == 1: t is infinite and p is reported as 0
    saturated: bool = False


def student_t_sf(t: float, df: int) -> float:
    """One-sided Student t survival function for t >= 0: I_x(df/2, 1/2) / 2 with x = df / (df + t^2)."""
    if df < 1:
        raise BadParameter(f"df must be at least 1, got {df}")
    if math.isnan(t) or t < 0:
        raise BadParameter(f"t must be non-negative, got {t}")
    if math.isinf(t):
        return 0.0
    x = df / (df + t * t)
    return 0.5 * float(betainc(df / 2.0, 0.5, x))


def t_test_p(r: float, n: int) -> TTestResult:
    """Analytical two-tailed test of a correlation: t = r * sqrt(n - 2) / sqrt(1 - r^2)."""
    if n < 3:
        raise BadParameter(f"t-test needs n >= 3, got {n}")
    if math.isnan(r) or abs(r) > 1.0:
        raise BadParameter(f"r must lie in [-1, 1], got {r}")
    df = n - 2
    if abs(r) == 1.0:
        logger.warning(f"Saturated correlation r={r} (n={n}); reporting p=0")
        return TTestResult(t=math.copysign(math.inf, r), df=df, p_two_tailed=0.0, saturated=True)
    t = r * math.sqrt(df) / math.sqrt(1.0 - r * r)
    p = min(1.0, 2.0 * student_t_sf(abs(t), df))
    return TTestResult(t=t, df=df, p_two_tailed=p)
