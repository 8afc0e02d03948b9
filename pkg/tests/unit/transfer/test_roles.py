import numpy as np
import pytest

import errors
from graph_core.models import Edge, Layer, MultilayerGraph
from transfer import RoleVector, percentile_ranks, role_similarity, role_vector
from tests.helpers.graph_helpers import make_graph, make_layer, random_graph

pytestmark = pytest.mark.unit


def test_top_and_bottom_hubs(extremal_graph) -> None:
    assert role_vector(extremal_graph, "v7", ["base", "mirror"]).components == (1.0, 1.0)
    assert role_vector(extremal_graph, "v0", ["base", "mirror"]).components == (0.0, 0.0)
    assert role_vector(extremal_graph, "v0", ["complement"]).components == (1.0,)


def test_second_of_three_is_half() -> None:
    graph = make_graph("three", ["x", "y", "z"], [make_layer("w", [("x", "y"), ("x", "z")], weights=[3.0, 1.0])])
    assert percentile_ranks(graph, "w") == [1.0, 0.5, 0.0]
    assert role_vector(graph, "y", ["w"]).components == (0.5,)


def test_weights_can_be_ignored() -> None:
    graph = make_graph("three", ["x", "y", "z"], [make_layer("w", [("x", "y"), ("x", "z")], weights=[3.0, 1.0])])
    assert percentile_ranks(graph, "w", use_weights=False) == [1.0, 0.25, 0.25]


def test_ties_share_the_average_percentile(small_path_graph) -> None:
    assert percentile_ranks(small_path_graph, "one") == [0.125, 0.75, 0.75, 0.75, 0.125]
    assert percentile_ranks(small_path_graph, "star") == [0.375, 0.375, 1.0, 0.375, 0.375]


def test_single_node_graph() -> None:
    graph = make_graph("solo", ["only"], [make_layer("empty", [])])
    assert percentile_ranks(graph, "empty") == [1.0]


def test_percentiles_ignore_weight_scale() -> None:
    rng = np.random.default_rng(3)
    for _ in range(10):
        graph = random_graph(rng, 9, 2, weighted=True)
        scaled = MultilayerGraph(name=graph.name, nodes=graph.nodes, layers=[
            Layer(name=layer.name, directed=layer.directed, weighted=True,
                  edges=[Edge(src=e.src, dst=e.dst, weight=e.weight * 2.5) for e in layer.edges])
            for layer in graph.layers])
        for name in graph.layer_names:
            assert percentile_ranks(graph, name) == percentile_ranks(scaled, name)


@pytest.mark.parametrize("a,b,expected", [
    ((0.3, 0.8), (0.3, 0.8), 1.0),
    ((1.0, 0.0), (0.0, 1.0), 0.0),
    ((0.0, 0.0), (0.0, 0.0), 1.0),
    ((0.0, 0.0), (0.4, 0.1), 0.0),
    ((1.0, 1.0), (1.0, 0.0), 2 ** -0.5),
])
def test_similarity_values(a, b, expected) -> None:
    assert role_similarity(RoleVector("a", a), RoleVector("b", b)) == pytest.approx(expected)


def test_similarity_is_symmetric_and_bounded() -> None:
    rng = np.random.default_rng(8)
    for _ in range(200):
        a = RoleVector("a", tuple(rng.random(4)))
        b = RoleVector("b", tuple(rng.random(4)))
        s = role_similarity(a, b)
        assert s == role_similarity(b, a)
        assert 0.0 <= s <= 1.0


def test_similarity_needs_matching_lengths() -> None:
    with pytest.raises(errors.LengthMismatch):
        role_similarity(RoleVector("a", (1.0,)), RoleVector("b", (1.0, 0.5)))
    with pytest.raises(errors.LengthMismatch):
        role_similarity(RoleVector("a", ()), RoleVector("b", ()))
