import logging
from typing import List, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from graph_core.models import MultilayerGraph
from .roles import role_similarity, role_vector

logger = logging.getLogger(__name__)

STRUCTURAL_MATCH_THRESHOLD = 0.65


class Alignment(BaseModel):
    """Hand-declared correspondence between two graphs' layers and modules."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    layer_pairs: List[Tuple[str, str]] = Field(..., min_length=1)
    module_pairs: List[Tuple[str, str]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _no_repeats(self) -> "Alignment":
        for side, label in ((0, "first"), (1, "second")):
            modules = [pair[side] for pair in self.module_pairs]
            if len(set(modules)) != len(modules):
                raise ValueError(f"module repeated on the {label} side of the alignment")
        return self

    @classmethod
    def identity(cls, graph: MultilayerGraph) -> "Alignment":
        return cls(layer_pairs=[(name, name) for name in graph.layer_names],
                   module_pairs=[(node_id, node_id) for node_id in graph.node_ids])

    def check(self, a: MultilayerGraph, b: MultilayerGraph) -> None:
        """Raises UnknownLayer / UnknownNode for references missing from either graph."""
        for layer_a, layer_b in self.layer_pairs:
            a.layer(layer_a)
            b.layer(layer_b)
        for module_a, module_b in self.module_pairs:
            a.index_of(module_a)
            b.index_of(module_b)


class ComparisonRow(BaseModel):
    module_a: str
    module_b: str
    similarity: float
    structural_match: bool


class ComparisonTable(BaseModel):
    threshold: float = STRUCTURAL_MATCH_THRESHOLD
    rows: List[ComparisonRow] = Field(default_factory=list)

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([row.model_dump() for row in self.rows],
                            columns=["module_a", "module_b", "similarity", "structural_match"])

    def to_text(self) -> str:
        if not self.rows:
            return "(no module pairs)"
        return self.to_dataframe().to_string(index=False, float_format=lambda v: f"{v:.4f}")


def compare_graphs(
    a: MultilayerGraph,
    b: MultilayerGraph,
    alignment: Alignment,
    threshold: float = STRUCTURAL_MATCH_THRESHOLD,
    use_weights: bool = True,
) -> ComparisonTable:
    """Role similarity for every aligned module pair, most similar first."""
    alignment.check(a, b)
    layers_a = [pair[0] for pair in alignment.layer_pairs]
    layers_b = [pair[1] for pair in alignment.layer_pairs]
    rows = []
    for module_a, module_b in alignment.module_pairs:
        similarity = role_similarity(role_vector(a, module_a, layers_a, use_weights),
                                     role_vector(b, module_b, layers_b, use_weights))
        rows.append(ComparisonRow(module_a=module_a, module_b=module_b, similarity=similarity,
                                  structural_match=similarity >= threshold))
    rows.sort(key=lambda row: (-row.similarity, row.module_a, row.module_b))
    matches = sum(row.structural_match for row in rows)
    logger.info(f"Compared '{a.name}' with '{b.name}': {len(rows)} module pairs, {matches} structural matches")
    return ComparisonTable(threshold=threshold, rows=rows)
