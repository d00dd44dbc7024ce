# tests/test_mwis.py

import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graph_mod import Graph, GraphTooLargeError
from service import (
    MwisBudgetExceeded,
    gen_named,
    gen_random,
    is_dominating,
    mwis_bruteforce,
    mwis_exact,
    phi_maximum_set,
    set_weight,
)
from tests.strategies import graphs

P3 = Graph(3, [(0, 1), (1, 2)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])


def test_bruteforce_examples():
    assert mwis_bruteforce(P3, [1, 5, 1]) == (5, frozenset({1}))
    assert mwis_bruteforce(gen_named("cycle", [5]), [1] * 5) == (2, frozenset({0, 2}))
    assert mwis_bruteforce(Graph(4), [1, 0, 2, 3]) == (6, frozenset({0, 1, 2, 3}))


def test_bruteforce_size_limit():
    with pytest.raises(GraphTooLargeError):
        mwis_bruteforce(Graph(25), [0] * 25)


def test_exact_examples():
    assert mwis_exact(gen_named("complete", [5]), [1] * 5) == {0}
    assert len(mwis_exact(gen_named("petersen"), [1] * 10)) == 4
    assert mwis_exact(P4, [2, 3, 3, 2]) == {0, 2}
    assert mwis_exact(Graph(0), []) == frozenset()
    # изолированная вершина веса 0 остаётся в лексикографически наименьшем ответе
    assert mwis_exact(Graph(2), [0, 1]) == mwis_bruteforce(Graph(2), [0, 1])[1] == {0, 1}


def test_exact_on_large_sparse_graphs():
    assert mwis_exact(Graph(1500), [1] * 1500) == frozenset(range(1500))
    graph = Graph(1500, [(0, 1), (2, 3), (1, 2)])
    assert mwis_exact(graph, [1] * 1500) == frozenset({0, 2}) | frozenset(range(4, 1500))
    assert phi_maximum_set(Graph(1500), [0] * 1500) == frozenset(range(1500))


def test_phi_validation():
    with pytest.raises(ValueError):
        mwis_exact(P3, [1, 2])
    with pytest.raises(ValueError):
        mwis_exact(P3, [1, -1, 0])
    with pytest.raises(ValueError):
        mwis_exact(P3, {0: 1, 1: 1})


def test_phi_maximum_examples():
    assert phi_maximum_set(P3, [0, 0, 0]) == {0, 2}
    assert phi_maximum_set(Graph(2, [(0, 1)]), [0, 0]) == {0}
    assert phi_maximum_set(gen_named("star", [3]), [1, 1, 1, 1]) == {1, 2, 3}
    assert phi_maximum_set(Graph(0), []) == frozenset()


def test_time_budget():
    graph = gen_random(40, "1/2", 3)
    with pytest.raises(MwisBudgetExceeded):
        mwis_exact(graph, [1] * 40, deadline=time.monotonic() - 1)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9), st.data())
def test_exact_matches_bruteforce(graph, data):
    phi = data.draw(st.lists(st.integers(0, 5), min_size=graph.n, max_size=graph.n))
    weight, witness = mwis_bruteforce(graph, phi)
    assert mwis_exact(graph, phi) == witness
    assert set_weight(phi, witness) == weight


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9), st.data())
def test_phi_maximum_is_independent_dominating_and_heaviest(graph, data):
    phi = data.draw(st.lists(st.integers(0, 4), min_size=graph.n, max_size=graph.n))
    chosen = phi_maximum_set(graph, phi)
    assert graph.is_independent(chosen)
    assert is_dominating(graph, chosen)
    assert set_weight(phi, chosen) == set_weight(phi, mwis_exact(graph, phi))


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=8), st.data())
def test_isolated_zero_vertex_keeps_weight(graph, data):
    phi = data.draw(st.lists(st.integers(0, 4), min_size=graph.n, max_size=graph.n))
    bigger = Graph(graph.n + 1, graph.edges)
    assert set_weight(phi + [0], mwis_exact(bigger, phi + [0])) == set_weight(phi, mwis_exact(graph, phi))


@pytest.mark.slow
def test_seeded_campaign_against_bruteforce():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(1, 16)
        graph = gen_random(n, rng.choice(["1/5", "2/5", "3/5"]), rng.getrandbits(32))
        phi = [rng.randint(0, 5) for _ in range(n)]
        weight, witness = mwis_bruteforce(graph, phi)
        found = mwis_exact(graph, phi)
        assert set_weight(phi, found) == weight
        assert found == witness
