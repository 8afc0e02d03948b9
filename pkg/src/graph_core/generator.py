import logging
from itertools import combinations

from errors import BadParameter
from prng import Pcg32Streams
from .models import Edge, Layer, MultilayerGraph, Node

logger = logging.getLogger(__name__)

DEFAULT_EDGE_PROB = 0.25


def generate_random_control(
    n_nodes: int,
    n_layers: int,
    edge_prob: float = DEFAULT_EDGE_PROB,
    seed: int = 42,
) -> MultilayerGraph:
    """
    Negative-control graph: every layer is an independent undirected
    Erdos-Renyi graph G(n_nodes, edge_prob).

    Layer ``i`` draws from substream ``mix(seed, i)``; unordered pairs are
    visited in lexicographic index order with one Bernoulli draw each, so the
    result is a pure function of the arguments.
    """
    if not isinstance(n_nodes, int) or n_nodes < 2:
        raise BadParameter(f"n_nodes must be an integer >= 2, got {n_nodes}", element="n_nodes")
    if not isinstance(n_layers, int) or n_layers < 1:
        raise BadParameter(f"n_layers must be a positive integer, got {n_layers}", element="n_layers")
    if not 0.0 < edge_prob < 1.0:
        raise BadParameter(f"edge_prob must lie in (0, 1), got {edge_prob}", element="edge_prob")
    if not 0 <= seed < 2 ** 64:
        raise BadParameter(f"seed must be a 64-bit unsigned integer, got {seed}", element="seed")

    width = len(str(n_nodes - 1))
    ids = [f"v{i:0{width}d}" for i in range(n_nodes)]
    pairs = list(combinations(range(n_nodes), 2))

    layers = []
    for layer_index in range(n_layers):
        stream = Pcg32Streams.single(seed, layer_index)
        edges = [
            Edge(src=ids[a], dst=ids[b])
            for a, b in pairs
            if bool(stream.bernoulli(edge_prob)[0])
        ]
        layers.append(Layer(name=f"random_{layer_index}", directed=False, weighted=False, edges=edges))

    graph = MultilayerGraph(
        name=f"random_control_n{n_nodes}_k{n_layers}_s{seed}",
        nodes=[Node(id=node_id) for node_id in ids],
        layers=layers,
    )
    logger.info(f"Generated negative control '{graph.name}' with "
                f"{[layer.edge_count for layer in layers]} edges per layer")
    return graph
