import logging
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from errors import UnknownLayer, UnknownNode

logger = logging.getLogger(__name__)


class GrammarClass(str, Enum):
    """Universal layer grammar: declared, structural and behavioral coupling."""
    D1_DECLARED = "d1"
    D2_STRUCTURAL = "d2"
    D3_BEHAVIORAL = "d3"


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class Node(_Frozen):
    id: str
    attrs: Dict[str, float] = Field(default_factory=dict)


class Edge(_Frozen):
    src: str
    dst: str
    weight: float = 1.0

    def key(self, directed: bool) -> tuple:
        """Identity of the edge within its layer; unordered for undirected layers."""
        if directed:
            return (self.src, self.dst)
        return tuple(sorted((self.src, self.dst)))


class Layer(_Frozen):
    name: str
    directed: bool = False
    weighted: bool = False
    grammar_class: Optional[GrammarClass] = None
    edges: List[Edge] = Field(default_factory=list)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


class MultilayerGraph(_Frozen):
    """Shared node set plus named edge layers. Node order indexes every hub vector."""
    name: str
    nodes: List[Node]
    layers: List[Layer] = Field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def k(self) -> int:
        return len(self.layers)

    @property
    def node_ids(self) -> List[str]:
        return [node.id for node in self.nodes]

    @property
    def layer_names(self) -> List[str]:
        return [layer.name for layer in self.layers]

    def node_index(self) -> Dict[str, int]:
        return {node.id: i for i, node in enumerate(self.nodes)}

    def layer(self, name: str) -> Layer:
        for layer in self.layers:
            if layer.name == name:
                return layer
        raise UnknownLayer(f"Layer '{name}' not found in graph '{self.name}'", element=name)

    def index_of(self, node_id: str) -> int:
        for i, node in enumerate(self.nodes):
            if node.id == node_id:
                return i
        raise UnknownNode(f"Node '{node_id}' not found in graph '{self.name}'", element=node_id)
