import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Type

import errors
from .models import MultilayerGraph

logger = logging.getLogger(__name__)

_ERRORS: Dict[str, Type[errors.DomainError]] = {
    "EmptyGraph": errors.EmptyGraph,
    "EmptyName": errors.SchemaError,
    "DuplicateNode": errors.DuplicateNode,
    "BadAttribute": errors.BadAttribute,
    "DuplicateLayer": errors.DuplicateLayer,
    "UnknownEndpoint": errors.UnknownEndpoint,
    "SelfLoop": errors.SelfLoop,
    "BadWeight": errors.BadWeight,
    "DuplicateEdge": errors.DuplicateEdge,
}


@dataclass(frozen=True)
class Violation:
    kind: str
    element: str
    message: str

    def to_error(self) -> errors.DomainError:
        return _ERRORS[self.kind](self.message, element=self.element)

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


def validate(graph: MultilayerGraph) -> List[Violation]:
    """Every invariant violation in ``graph``, in document order. Never raises."""
    found: List[Violation] = []

    if not graph.nodes:
        found.append(Violation("EmptyGraph", graph.name, f"graph '{graph.name}' has no nodes"))

    seen_nodes = set()
    for node in graph.nodes:
        if not node.id:
            found.append(Violation("EmptyName", "", "node id must be a non-empty string"))
        if node.id in seen_nodes:
            found.append(Violation("DuplicateNode", node.id, f"node '{node.id}' appears more than once"))
        seen_nodes.add(node.id)
        for attr, value in node.attrs.items():
            if not math.isfinite(value):
                found.append(Violation("BadAttribute", f"{node.id}.{attr}",
                                       f"attribute '{attr}' of node '{node.id}' is not finite ({value})"))

    seen_layers = set()
    for layer in graph.layers:
        if not layer.name:
            found.append(Violation("EmptyName", "", "layer name must be a non-empty string"))
        if layer.name in seen_layers:
            found.append(Violation("DuplicateLayer", layer.name, f"layer '{layer.name}' appears more than once"))
        seen_layers.add(layer.name)

        seen_edges = set()
        for edge in layer.edges:
            label = f"{layer.name}:{edge.src}->{edge.dst}"
            for endpoint in (edge.src, edge.dst):
                if endpoint not in seen_nodes:
                    found.append(Violation("UnknownEndpoint", endpoint,
                                           f"edge {label} references unknown node '{endpoint}'"))
            if edge.src == edge.dst:
                found.append(Violation("SelfLoop", label, f"edge {label} is a self-loop"))
            if not math.isfinite(edge.weight) or edge.weight <= 0:
                found.append(Violation("BadWeight", label, f"edge {label} has invalid weight {edge.weight}"))
            elif not layer.weighted and edge.weight != 1.0:
                found.append(Violation("BadWeight", label,
                                       f"edge {label} has weight {edge.weight} in unweighted layer"))
            key = edge.key(layer.directed)
            if key in seen_edges:
                found.append(Violation("DuplicateEdge", label, f"edge {label} is duplicated"))
            seen_edges.add(key)

    if found:
        logger.debug(f"Graph '{graph.name}' has {len(found)} violation(s)")
    return found
