from .roles import RoleVector, percentile_ranks, role_similarity, role_vector
from .alignment import (
    STRUCTURAL_MATCH_THRESHOLD,
    Alignment,
    ComparisonRow,
    ComparisonTable,
    compare_graphs,
)
from .hubs import hub_identity_check

__all__ = [
    "RoleVector", "percentile_ranks", "role_similarity", "role_vector",
    "STRUCTURAL_MATCH_THRESHOLD", "Alignment", "ComparisonRow", "ComparisonTable", "compare_graphs",
    "hub_identity_check",
]
