from typing import Iterable, List, Optional, Sequence

from .models import Layer, MultilayerGraph, Node


def assemble_graph(
    name: str,
    layers: Sequence[Layer],
    nodes: Optional[Iterable[Node]] = None,
) -> MultilayerGraph:
    """
    Put extracted layers over one node set.

    Without ``nodes`` the node set is the sorted union of all edge endpoints.
    Given nodes keep their order; endpoints missing from them are appended
    in sorted order.
    """
    given: List[Node] = list(nodes) if nodes is not None else []
    known = {node.id for node in given}
    endpoints = {endpoint for layer in layers for edge in layer.edges for endpoint in (edge.src, edge.dst)}
    extra = [Node(id=node_id) for node_id in sorted(endpoints - known)]
    return MultilayerGraph(name=name, nodes=given + extra, layers=list(layers))
