# tests/test_oracle.py

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from families import get_graph_family
from graph_mod import Element, Graph, TotalWeighting
from service import (
    InstanceTooLargeError,
    RegularGenerationError,
    exhaustive_offsets,
    gen_named,
    gen_random,
    gen_regular,
    solve_offsets,
)
from tests.strategies import instances

K2 = Graph(2, [(0, 1)])
K3 = Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_k2_count():
    result = exhaustive_offsets(K2, TotalWeighting.zero(K2), 1)
    assert result.count == 4
    assert result.total == 8
    assert result.summary() == "feasible, count=4"
    # лексикографически первое: w(0)=0, w(1)=1, ребро лёгкое
    assert sorted(z.key() for z in result.first.heavy_elements()) == ["1"]


def test_single_vertex_count():
    graph = Graph(1)
    result = exhaustive_offsets(graph, TotalWeighting.zero(graph), 3)
    assert result.count == 2
    assert result.first.heavy_elements() == frozenset()


def test_k3_count():
    assert exhaustive_offsets(K3, TotalWeighting.zero(K3), 1).count == 12


def test_empty_graph():
    result = exhaustive_offsets(Graph(0), TotalWeighting({}), 1)
    assert result.count == 1


def test_size_limit():
    graph = gen_named("complete", [7])
    with pytest.raises(InstanceTooLargeError):
        exhaustive_offsets(graph, TotalWeighting.zero(graph), 1)


def test_fractional_differences_never_clash():
    base = TotalWeighting({Element.vertex(0): 0, Element.vertex(1): "1/2", Element.edge(0, 1): 0})
    assert exhaustive_offsets(K2, base, 1).count == 8


def test_contains_solver_output():
    base = TotalWeighting.zero(K3)
    offsets, _, _ = solve_offsets(K3, base, 1)
    result = exhaustive_offsets(K3, base, 1)
    assert result.contains(offsets)
    assert result.contains(result.first)


@settings(max_examples=80, deadline=None)
@given(instances(max_n=5))
def test_count_is_invariant_under_relabelling(instance):
    graph, base, span = instance
    perm = list(graph.vertices())
    random.Random(graph.m).shuffle(perm)
    relabelled = Graph(graph.n, [(perm[u], perm[v]) for u, v in graph.edges])
    moved = {}
    for z in graph.elements():
        target = Element.vertex(perm[z.id]) if z.is_vertex else Element.edge(perm[z.id[0]], perm[z.id[1]])
        moved[target] = base[z]
    expected = exhaustive_offsets(graph, base, span).count
    assert exhaustive_offsets(relabelled, TotalWeighting(moved), span).count == expected
    assert expected >= 1


@settings(max_examples=80, deadline=None)
@given(instances(max_n=5))
def test_solver_output_is_feasible(instance):
    graph, base, span = instance
    offsets, _, _ = solve_offsets(graph, base, span)
    assert exhaustive_offsets(graph, base, span).contains(offsets)


def test_named_families():
    c5 = gen_named("cycle", [5])
    assert c5.edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))
    petersen = gen_named("petersen")
    assert (petersen.n, petersen.m) == (10, 15)
    assert all(petersen.degree(v) == 3 for v in petersen.vertices())
    assert gen_named("complete", [4]).m == 6
    assert gen_named("path", [4]).edges == ((0, 1), (1, 2), (2, 3))
    assert gen_named("star", [3]).adjacency[0] == (1, 2, 3)
    k23 = gen_named("complete_bipartite", [2, 3])
    assert k23.adjacency[0] == (2, 3, 4)
    cube = gen_named("hypercube", [3])
    assert (cube.n, cube.m) == (8, 12)
    assert cube.adjacency[0] == (1, 2, 4)


@pytest.mark.parametrize("name, params", [
    ("dodecahedron", []),
    ("cycle", [2]),
    ("cycle", []),
    ("complete_bipartite", [2]),
    ("path", ["x"]),
    ("petersen", [3]),
])
def test_named_family_errors(name, params):
    with pytest.raises(ValueError):
        gen_named(name, params)


def test_family_registry():
    family = get_graph_family("complete_bipartite")()
    assert family.name() == "complete_bipartite"
    assert "left side" in family.numbering()
    assert isinstance(family.build_nx(1, 2), nx.Graph)


def test_random_graphs():
    assert gen_random(5, 0, 1).m == 0
    assert gen_random(5, 1, 1) == gen_named("complete", [5])
    assert gen_random(7, "1/2", 9) == gen_random(7, "1/2", 9)
    assert gen_random(0, "1/2", 9).n == 0
    with pytest.raises(ValueError):
        gen_random(5, "3/2", 1)
    with pytest.raises(ValueError):
        gen_random(5, 0.5, 1)


def test_regular_graphs():
    graph = gen_regular(10, 3, 4)
    assert graph.m == 15
    assert all(graph.degree(v) == 3 for v in graph.vertices())
    assert gen_regular(10, 3, 4) == graph
    assert gen_regular(5, 0, 4).m == 0
    with pytest.raises(ValueError):
        gen_regular(5, 3, 1)
    with pytest.raises(ValueError):
        gen_regular(4, 4, 1)


def test_regular_generation_gives_up():
    with pytest.raises(RegularGenerationError):
        gen_regular(4, 3, 1, max_restarts=0)
