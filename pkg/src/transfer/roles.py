import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from errors import LengthMismatch
from graph_core.models import MultilayerGraph
from metrics.hub import degree_vector, descending_ranks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoleVector:
    """Per-layer hub percentiles of one module (1 = top hub, 0 = bottom)."""
    module: str
    components: Tuple[float, ...]


def percentile_ranks(graph: MultilayerGraph, layer_name: str, use_weights: bool = True) -> List[float]:
    """1 - (rank_desc - 1) / (n - 1) for every node; 1 for a single-node graph."""
    weighted = use_weights and graph.layer(layer_name).weighted
    hubs = degree_vector(graph, layer_name, use_weights=weighted)
    n = len(hubs)
    if n == 1:
        return [1.0]
    return [1.0 - (rank - 1.0) / (n - 1) for rank in descending_ranks(hubs.values)]


def role_vector(graph: MultilayerGraph, module: str, layers: Sequence[str], use_weights: bool = True) -> RoleVector:
    position = graph.index_of(module)
    components = tuple(float(percentile_ranks(graph, name, use_weights)[position]) for name in layers)
    return RoleVector(module=module, components=components)


def role_similarity(a: RoleVector, b: RoleVector) -> float:
    """Cosine similarity of two role vectors; two all-zero vectors count as identical."""
    if len(a.components) != len(b.components):
        raise LengthMismatch(f"Role vectors differ in length ({len(a.components)} vs {len(b.components)})")
    if not a.components:
        raise LengthMismatch("Role vectors need at least one component")
    aa = math.fsum(x * x for x in a.components)
    bb = math.fsum(y * y for y in b.components)
    if aa == 0.0 and bb == 0.0:
        return 1.0
    if aa == 0.0 or bb == 0.0:
        return 0.0
    dot = math.fsum(x * y for x, y in zip(a.components, b.components))
    return min(1.0, max(0.0, dot / math.sqrt(aa * bb)))
