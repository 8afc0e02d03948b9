import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np
from scipy.stats import rankdata

from errors import DegenerateVector, LengthMismatch, MissingAttribute
from graph_core.models import MultilayerGraph
from .hub import HubVector, degree_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankVector:
    """Average (mid) ranks, 1 = smallest value."""
    values: Tuple[float, ...]
    tie_policy: str = "average"

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class CorrelationValue:
    r: float
    n: int

    def __float__(self) -> float:
        return self.r


VectorLike = Union[HubVector, RankVector, Sequence[float], np.ndarray]


def as_vector(values: VectorLike) -> np.ndarray:
    if isinstance(values, (HubVector, RankVector)):
        values = values.values
    return np.asarray(values, dtype=np.float64).reshape(-1)


def rank_vector(h: VectorLike) -> RankVector:
    ranks = rankdata(as_vector(h), method="average")
    return RankVector(values=tuple(float(r) for r in ranks))


def pearson(a: VectorLike, b: VectorLike) -> CorrelationValue:
    """
    Product-moment correlation, clamped to [-1, 1]. Sums run in node order
    with compensated summation so every platform agrees to the last bits.
    """
    x = as_vector(a)
    y = as_vector(b)
    if x.size != y.size:
        raise LengthMismatch(f"Vectors differ in length ({x.size} vs {y.size})")
    if x.size < 2:
        raise DegenerateVector(f"Correlation needs at least 2 entries, got {x.size}")
    for label, v in (("first", x), ("second", y)):
        if np.all(v == v[0]):
            raise DegenerateVector(f"The {label} vector has zero variance; correlation is undefined",
                                   element=label)

    n = x.size
    dx = x - math.fsum(x) / n
    dy = y - math.fsum(y) / n
    sxy = math.fsum(dx * dy)
    sxx = math.fsum(dx * dx)
    syy = math.fsum(dy * dy)
    r = sxy / math.sqrt(sxx * syy)
    return CorrelationValue(r=min(1.0, max(-1.0, r)), n=n)


def spearman(a: VectorLike, b: VectorLike) -> CorrelationValue:
    return pearson(rank_vector(a), rank_vector(b))


def attr_degree_correlation(graph: MultilayerGraph, layer_name: str, attr_name: str) -> CorrelationValue:
    """Pearson between a node attribute and the layer's unweighted hub vector."""
    missing = [node.id for node in graph.nodes if attr_name not in node.attrs]
    if missing:
        raise MissingAttribute(
            f"Attribute '{attr_name}' missing on {len(missing)} node(s), first: '{missing[0]}'",
            element=missing[0],
        )
    attribute = [node.attrs[attr_name] for node in graph.nodes]
    hubs = degree_vector(graph, layer_name, use_weights=False)
    result = pearson(attribute, hubs)
    logger.info(f"Attribute '{attr_name}' vs hub rank in '{layer_name}': r={result.r:.4f} (n={result.n})")
    return result
