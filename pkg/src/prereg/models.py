import math
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from experiment.models import DIGEST_PATTERN, LayerPair


class Direction(str, Enum):
    GREATER = "greater"
    LESS = "less"


class HypothesisDoc(BaseModel):
    """What gets committed before analysis: statements, the pair classification and the expected direction."""
    model_config = ConfigDict(extra="forbid")

    experiment_id: str = Field(..., min_length=1)
    statement_texts: List[str] = Field(..., min_length=1)
    similar_pair: LayerPair
    dissimilar_pair: Optional[LayerPair] = None
    direction: Direction = Direction.GREATER
    thresholds: Dict[str, float] = Field(default_factory=dict)
    author: str = ""
    notes: str = ""

    @field_validator("experiment_id")
    @classmethod
    def _non_blank(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("experiment_id must not be blank")
        return value

    @field_validator("thresholds")
    @classmethod
    def _finite(cls, value: Dict[str, float]) -> Dict[str, float]:
        for key, number in value.items():
            if not math.isfinite(number):
                raise ValueError(f"threshold '{key}' must be finite, got {number}")
        return value


class PreregRecord(BaseModel):
    """One ledger line."""
    model_config = ConfigDict(populate_by_name=True)

    ledger_index: int = Field(..., ge=0, alias="index")
    digest: str = Field(..., pattern=DIGEST_PATTERN)
    timestamp_utc: str
    doc: HypothesisDoc
