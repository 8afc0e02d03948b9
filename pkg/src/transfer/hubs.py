import logging

from errors import BadParameter
from graph_core.models import MultilayerGraph
from metrics.hub import hub_rank

logger = logging.getLogger(__name__)


def hub_identity_check(graph: MultilayerGraph, layer: str, module: str, max_rank: int,
                       use_weights: bool = False) -> bool:
    """True iff ``module``'s descending average-tie degree rank in ``layer`` is at most ``max_rank``."""
    if max_rank < 1:
        raise BadParameter(f"max_rank must be positive, got {max_rank}")
    rank = hub_rank(graph, layer, module, use_weights=use_weights)
    logger.debug(f"'{module}' ranks {rank} in '{layer}' (limit {max_rank})")
    return rank <= max_rank
