import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from stats.binomial import BinomialTail, binom_tail
from .models import Criterion, Verdict

logger = logging.getLogger(__name__)


def classify_verdict(
    delta_r: float,
    p_sim: float,
    criterion: Criterion = Criterion.LEGACY_DIRECTIONAL,
    delta_r_floor: float = 0.20,
    alpha: float = 0.05,
) -> Verdict:
    """
    legacy_directional: CONFIRMED iff delta_r > 0, else DENIED.
    thresholded_v2: DENIED when delta_r < 0, CONFIRMED when delta_r >= floor
    and p < alpha, PARTIAL otherwise (including delta_r == 0).
    """
    criterion = Criterion(criterion)
    if criterion is Criterion.LEGACY_DIRECTIONAL:
        return Verdict.CONFIRMED if delta_r > 0 else Verdict.DENIED
    if delta_r < 0:
        return Verdict.DENIED
    if delta_r >= delta_r_floor and p_sim < alpha:
        return Verdict.CONFIRMED
    return Verdict.PARTIAL


@dataclass(frozen=True)
class ReplayRow:
    delta_r: float
    verdict: Verdict


def replay_table(rows: Iterable[Tuple[float, float, float]]) -> List[ReplayRow]:
    """Recompute delta_r (3 decimals) and the legacy verdict for published (r_sim, r_dis, p_sim) rows."""
    replayed = []
    for r_sim, r_dis, p_sim in rows:
        delta_r = round(r_sim - r_dis, 3)
        replayed.append(ReplayRow(delta_r=delta_r, verdict=classify_verdict(delta_r, p_sim)))
    return replayed


@dataclass(frozen=True)
class EvidenceSummary:
    confirmed: int
    total: int
    tail: BinomialTail

    def __str__(self) -> str:
        return f"{self.confirmed}/{self.total} confirmed, P(X >= {self.confirmed}) = {self.tail}"


def summarize_evidence(verdicts: Sequence[Verdict]) -> EvidenceSummary:
    """Count confirmations and attach the exact chance probability of at least that many."""
    confirmed = sum(1 for verdict in verdicts if Verdict(verdict) is Verdict.CONFIRMED)
    summary = EvidenceSummary(confirmed=confirmed, total=len(verdicts), tail=binom_tail(confirmed, len(verdicts)))
    logger.info(f"Evidence: {summary}")
    return summary
