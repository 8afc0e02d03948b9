from .models import Edge, GrammarClass, Layer, MultilayerGraph, Node
from .validation import Violation, validate
from .codec import graph_to_dict, load_graph, parse_graph, parse_graph_schema, save_graph, serialize_graph
from .generator import generate_random_control
from .assembly import assemble_graph

__all__ = [
    "Edge", "GrammarClass", "Layer", "MultilayerGraph", "Node",
    "Violation", "validate",
    "graph_to_dict", "load_graph", "parse_graph", "parse_graph_schema", "save_graph", "serialize_graph",
    "generate_random_control", "assemble_graph",
]
