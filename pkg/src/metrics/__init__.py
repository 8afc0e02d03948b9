from .hub import (
    HubVector,
    RankDivergence,
    degree_vector,
    descending_ranks,
    hub_rank,
    hub_shadows,
    hub_table,
    rank_divergence,
)
from .correlation import (
    CorrelationValue,
    RankVector,
    as_vector,
    attr_degree_correlation,
    pearson,
    rank_vector,
    spearman,
)

__all__ = [
    "HubVector", "RankDivergence", "degree_vector", "descending_ranks", "hub_rank", "hub_shadows", "hub_table",
    "rank_divergence",
    "CorrelationValue", "RankVector", "as_vector",
    "attr_degree_correlation", "pearson", "rank_vector", "spearman",
]
