import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.stats import rankdata

from errors import BadParameter, WeightsUnavailable
from graph_core.models import MultilayerGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HubVector:
    """Per-layer total degree, aligned to graph node order."""
    layer_name: str
    values: Tuple[float, ...]
    weighted: bool = False

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


def degree_vector(graph: MultilayerGraph, layer_name: str, use_weights: bool = False) -> HubVector:
    """
    Total degree per node. Undirected edges add to both endpoints; directed
    edges add to the source's out-degree and the target's in-degree, and the
    entry is in + out. Weighted variants sum edge weights instead of 1.
    """
    layer = graph.layer(layer_name)
    if use_weights and not layer.weighted:
        raise WeightsUnavailable(f"Layer '{layer_name}' is unweighted", element=layer_name)

    index = graph.node_index()
    src = np.fromiter((index[e.src] for e in layer.edges), dtype=np.intp, count=len(layer.edges))
    dst = np.fromiter((index[e.dst] for e in layer.edges), dtype=np.intp, count=len(layer.edges))
    if use_weights:
        weights = np.fromiter((e.weight for e in layer.edges), dtype=np.float64, count=len(layer.edges))
    else:
        weights = np.ones(len(layer.edges), dtype=np.float64)

    if layer.directed:
        out_degree = np.zeros(graph.n, dtype=np.float64)
        in_degree = np.zeros(graph.n, dtype=np.float64)
        np.add.at(out_degree, src, weights)
        np.add.at(in_degree, dst, weights)
        total = in_degree + out_degree
    else:
        total = np.zeros(graph.n, dtype=np.float64)
        np.add.at(total, src, weights)
        np.add.at(total, dst, weights)

    logger.debug(f"Hub vector for '{layer_name}' (weighted={use_weights}): {total.tolist()}")
    return HubVector(layer_name=layer_name, values=tuple(float(v) for v in total), weighted=use_weights)


def hub_table(graph: MultilayerGraph, layers: Sequence[str] = (), use_weights: bool = False) -> pd.DataFrame:
    """Degrees of every node (rows, graph order) in each requested layer (columns)."""
    names = list(layers) or graph.layer_names
    columns = {}
    for name in names:
        weighted = use_weights and graph.layer(name).weighted
        columns[name] = degree_vector(graph, name, use_weights=weighted).values
    return pd.DataFrame(columns, index=pd.Index(graph.node_ids, name="node"))


def descending_ranks(values: Sequence[float]) -> np.ndarray:
    """Average-tie ranks where 1 is the largest value."""
    return rankdata(-np.asarray(values, dtype=np.float64), method="average")


def hub_rank(graph: MultilayerGraph, layer_name: str, node_id: str, use_weights: bool = False) -> float:
    """Rank of ``node_id`` among all nodes by hub score in ``layer_name`` (1 = biggest hub)."""
    position = graph.index_of(node_id)
    hubs = degree_vector(graph, layer_name, use_weights=use_weights)
    return float(descending_ranks(hubs.values)[position])


@dataclass(frozen=True)
class RankDivergence:
    """A node's descending hub rank in two layers; ``gap`` is rank_b - rank_a."""
    node: str
    rank_a: float
    rank_b: float

    @property
    def gap(self) -> float:
        return self.rank_b - self.rank_a


def rank_divergence(graph: MultilayerGraph, layer_a: str, layer_b: str,
                    use_weights: bool = False) -> List[RankDivergence]:
    """
    Per-node hub ranks in two layers, largest absolute gap first (graph order
    among equal gaps). A positive gap means the node is more central in
    ``layer_a``. Weights apply only to layers that carry them.
    """
    ranks = {}
    for name in (layer_a, layer_b):
        weighted = use_weights and graph.layer(name).weighted
        ranks[name] = descending_ranks(degree_vector(graph, name, use_weights=weighted).values)
    rows = [RankDivergence(node=node_id, rank_a=float(ranks[layer_a][i]), rank_b=float(ranks[layer_b][i]))
            for i, node_id in enumerate(graph.node_ids)]
    rows.sort(key=lambda row: -abs(row.gap))
    if rows:
        logger.debug(f"Rank divergence '{layer_a}' vs '{layer_b}': widest gap {rows[0].node} ({rows[0].gap:+g})")
    return rows


def hub_shadows(divergences: Sequence[RankDivergence], top: int = 5, floor: int = 15) -> List[RankDivergence]:
    """Nodes ranked within ``top`` in the first layer and at ``floor`` or below in the second."""
    if top < 1 or floor < 1:
        raise BadParameter(f"top and floor must be >= 1, got {top} and {floor}", element="top" if top < 1 else "floor")
    return [row for row in divergences if row.rank_a <= top and row.rank_b >= floor]
