from .models import (
    REPORT_SCHEMA_VERSION,
    Criterion,
    ExperimentConfig,
    ExperimentReport,
    LayerPair,
    PairClassification,
    PairResult,
    Tier,
    Verdict,
)
from .verdict import EvidenceSummary, ReplayRow, classify_verdict, replay_table, summarize_evidence
from .runner import TIMESTAMP_FORMAT, analyse_pair, check_config, persistence, run_experiment
from .canonical import TIER_A_ROWS, TIER_B_ROWS, CanonicalRow, canonical_rows

__all__ = [
    "REPORT_SCHEMA_VERSION", "Criterion", "ExperimentConfig", "ExperimentReport", "LayerPair",
    "PairClassification", "PairResult", "Tier", "Verdict",
    "EvidenceSummary", "ReplayRow", "classify_verdict", "replay_table", "summarize_evidence",
    "TIMESTAMP_FORMAT", "analyse_pair", "check_config", "persistence", "run_experiment",
    "TIER_A_ROWS", "TIER_B_ROWS", "CanonicalRow", "canonical_rows",
]
