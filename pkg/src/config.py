import logging
import sys
from datetime import datetime, timezone
from functools import lru_cache
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class StatsConfig(BaseModel):
    """Defaults for the permutation machinery. Mirrors the published protocol (200 runs, seed 42)."""
    n_permutations: int = Field(200, gt=0, description="Permutations per sampled test")
    seed: int = Field(42, ge=0, lt=2**64, description="Master seed for all substreams")
    counting_rule: Literal["greater_or_equal", "strict_greater"] = "greater_or_equal"
    mode: Literal["sampled", "exhaustive"] = "sampled"
    max_workers: int = Field(4, ge=1, description="Threads used to evaluate permutation chunks")
    chunk_size: int = Field(4096, gt=0, description="Permutations per worker task")


class ExperimentDefaults(BaseModel):
    criterion: Literal["legacy_directional", "thresholded_v2"] = "legacy_directional"
    delta_r_floor: float = Field(0.20, ge=0.0)
    alpha: float = Field(0.05, gt=0.0, lt=1.0)
    structural_match_threshold: float = Field(0.65, ge=0.0, le=1.0)


class ExtractConfig(BaseModel):
    bulk_threshold: int = Field(30, gt=0, description="Commits touching more modules than this are skipped")
    imports_layer: str = "imports"
    coupling_layer: str = "structural_coupling"
    cochange_layer: str = "co_change"


class Settings(BaseSettings):
    stats: StatsConfig = Field(default_factory=StatsConfig)
    experiment: ExperimentDefaults = Field(default_factory=ExperimentDefaults)
    extract: ExtractConfig = Field(default_factory=ExtractConfig)
    # PROXLAW_LEDGER
    ledger: Path = Path("prereg_ledger.jsonl")
    log_level: str = "INFO"
    # Pins every timestamp the CLI writes so reruns are byte-identical.
    source_date_epoch: Optional[int] = Field(None, validation_alias="SOURCE_DATE_EPOCH")

    model_config = SettingsConfigDict(
        env_prefix="PROXLAW_",
        env_file=".env",
        extra="ignore",
        env_nested_delimiter="__",
    )

    def now_utc(self) -> datetime:
        """Current UTC instant, or the pinned one when SOURCE_DATE_EPOCH is set."""
        if self.source_date_epoch is not None:
            return datetime.fromtimestamp(self.source_date_epoch, tz=timezone.utc)
        return datetime.now(timezone.utc)


@lru_cache()
def get_settings() -> Settings:
    return Settings()


def configure_logging(level: str = "INFO") -> None:
    # stderr: stdout is reserved for command output (JSON or text)
    logging.basicConfig(
        level=level.upper(),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
