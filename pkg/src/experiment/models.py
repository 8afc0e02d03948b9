from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from stats.permutation import CountingRule, PermutationMode

REPORT_SCHEMA_VERSION = "1.0"
DIGEST_PATTERN = r"^[0-9a-f]{64}$"


class PairClassification(str, Enum):
    SIMILAR = "similar"
    DISSIMILAR = "dissimilar"


class Criterion(str, Enum):
    LEGACY_DIRECTIONAL = "legacy_directional"
    THRESHOLDED_V2 = "thresholded_v2"


class Verdict(str, Enum):
    DENIED = "DENIED"
    PARTIAL = "PARTIAL"
    CONFIRMED = "CONFIRMED"

    @property
    def order(self) -> int:
        return _VERDICT_ORDER[self]


_VERDICT_ORDER = {Verdict.DENIED: 0, Verdict.PARTIAL: 1, Verdict.CONFIRMED: 2}


class Tier(str, Enum):
    """Evidence tier. Reporting metadata only; nothing branches on it."""
    A = "A"
    B = "B"
    C = "C"
    D = "D"


class LayerPair(BaseModel):
    model_config = ConfigDict(extra="forbid")

    layer_a: str = Field(..., min_length=1)
    layer_b: str = Field(..., min_length=1)
    classification: PairClassification

    @model_validator(mode="after")
    def _distinct_layers(self) -> "LayerPair":
        if self.layer_a == self.layer_b:
            raise ValueError(f"layer pair must name two different layers, got '{self.layer_a}' twice")
        return self


class ExperimentConfig(BaseModel):
    """One pre-registered law test: similar pair vs dissimilar pair on one graph."""
    model_config = ConfigDict(extra="forbid")

    graph_name: str
    similar: LayerPair
    dissimilar: LayerPair
    use_weights: bool = False
    n_permutations: int = Field(200, gt=0)
    seed: int = Field(42, ge=0, lt=2**64)
    mode: PermutationMode = PermutationMode.SAMPLED
    counting_rule: CountingRule = CountingRule.GREATER_OR_EQUAL
    # False selects the analytical t p-value for the verdict
    use_permutation: bool = True
    criterion: Criterion = Criterion.LEGACY_DIRECTIONAL
    delta_r_floor: float = Field(0.20, ge=0.0)
    alpha: float = Field(0.05, gt=0.0, lt=1.0)
    min_abs_r: Optional[float] = Field(None, ge=0.0, le=1.0)
    tier: Optional[Tier] = None
    prereg_digest: Optional[str] = Field(None, pattern=DIGEST_PATTERN)

    @model_validator(mode="after")
    def _pair_roles(self) -> "ExperimentConfig":
        if self.similar.classification is not PairClassification.SIMILAR:
            raise ValueError("'similar' pair must be classified as similar")
        if self.dissimilar.classification is not PairClassification.DISSIMILAR:
            raise ValueError("'dissimilar' pair must be classified as dissimilar")
        return self


class PairResult(BaseModel):
    layer_a: str
    layer_b: str
    r: float = Field(..., ge=-1.0, le=1.0)
    rho: float = Field(..., ge=-1.0, le=1.0)
    p_permutation: Optional[float] = Field(None, ge=0.0, le=1.0)
    count_exceeding: Optional[int] = Field(None, ge=0)
    p_t_fallback: float = Field(..., ge=0.0, le=1.0)
    # None when |r| = 1 and t diverges
    t: Optional[float] = None
    t_saturated: bool = False
    n: int


class ExperimentReport(BaseModel):
    schema_version: str = REPORT_SCHEMA_VERSION
    config: ExperimentConfig
    sim: PairResult
    dis: PairResult
    delta_r: float
    p_verdict: float = Field(..., ge=0.0, le=1.0)
    verdict: Verdict
    sign_agreement: bool
    min_abs_r_met: Optional[bool] = None
    tier: Optional[Tier] = None
    timestamp_utc: str

    @model_validator(mode="after")
    def _consistent(self) -> "ExperimentReport":
        from .verdict import classify_verdict

        if self.delta_r != self.sim.r - self.dis.r:
            raise ValueError(f"delta_r {self.delta_r} != sim.r - dis.r ({self.sim.r - self.dis.r})")
        expected = classify_verdict(self.delta_r, self.p_verdict, self.config.criterion,
                                    self.config.delta_r_floor, self.config.alpha)
        if expected is not self.verdict:
            raise ValueError(f"verdict {self.verdict.value} disagrees with the stored fields ({expected.value})")
        return self
