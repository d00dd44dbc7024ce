# tests/test_weighting.py

import itertools
import random
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings

from graph_mod import Element, Graph, ListAssignment, TotalWeighting, UndefinedWeightError, weighted_degree
from service import (
    DegenerateList,
    MissingList,
    NonUniformSpan,
    OffsetWeighting,
    RunState,
    RunTrace,
    VertexStatus,
    build_levels,
    gen_named,
    gen_regular,
    replay_trace,
    solve_lists,
    solve_offsets,
    split_lists,
    verify_list_membership,
    verify_offsets,
    verify_proper,
    vertex_status,
)
from tests.strategies import instances

K2 = Graph(2, [(0, 1)])
K3 = Graph(3, [(0, 1), (1, 2), (0, 2)])


def heavy_keys(offsets):
    return sorted(z.key() for z in offsets.heavy_elements())


def sigma(graph, weights):
    return [weighted_degree(graph, weights, v) for v in graph.vertices()]


def test_k2_offsets():
    base = TotalWeighting.zero(K2)
    offsets, dec, trace = solve_offsets(K2, base, 1)
    assert heavy_keys(offsets) == ["1"]
    assert sigma(K2, base + offsets) == [0, 1]
    assert [r.level for r in trace.iterations] == [0]
    assert trace.iterations[0].greedy_vertices == [1]


def test_k3_offsets():
    base = TotalWeighting.zero(K3)
    offsets, dec, trace = solve_offsets(K3, base, 1)
    assert heavy_keys(offsets) == ["1-2", "2"]
    assert sigma(K3, base + offsets) == [0, 1, 2]
    first = trace.iterations[0]
    assert first.level == 1
    assert first.greedy_vertices == [2]
    assert first.uorder == [2]
    assert first.forest == [(1, 2)]


def test_k4_offsets_hit_consecutive_targets():
    graph = gen_named("complete", [4])
    base = TotalWeighting.zero(graph)
    offsets, _, _ = solve_offsets(graph, base, 1)
    assert sigma(graph, base + offsets) == [0, 1, 2, 3]


def test_edgeless_graph_stays_light():
    graph = Graph(3)
    offsets, dec, trace = solve_offsets(graph, TotalWeighting.zero(graph), "5/2")
    assert offsets.heavy_elements() == frozenset()
    assert trace.iterations == []
    assert dec.height == 1

    # разные базовые веса: каждая вершина на своём уровне, но тоже полна сразу
    base = TotalWeighting({z: Fraction(i, 2) for i, z in enumerate(graph.elements())})
    offsets, dec, trace = solve_offsets(graph, base, "5/2")
    assert offsets.heavy_elements() == frozenset()
    assert dec.height == 3
    assert all(not r.assignments for r in trace.iterations)


def test_large_edgeless_graph():
    graph = Graph(1500)
    base = TotalWeighting.zero(graph)
    offsets, dec, trace = solve_offsets(graph, base, 1)
    assert offsets.heavy_elements() == frozenset()
    assert dec.height == 1
    assert verify_offsets(graph, base, 1, offsets, dec).overall


def test_solver_rejects_partial_base():
    with pytest.raises(UndefinedWeightError):
        solve_offsets(K2, {Element.vertex(0): 0, Element.vertex(1): 0}, 1)


def test_offset_weighting_helpers():
    offsets = OffsetWeighting.from_heavy(K2, "1/2", [Element.edge(0, 1)])
    assert offsets.is_heavy(Element.edge(0, 1))
    assert not offsets.is_heavy(Element.vertex(0))
    assert offsets.pattern() == (False, False, True)
    assert offsets.to_json()["span"] == "1/2"
    assert offsets != OffsetWeighting.from_heavy(K2, 1, [Element.edge(0, 1)])


def test_vertex_status():
    base = TotalWeighting.zero(K3)
    dec = build_levels(K3, base, 1)
    state = RunState(K3, base, dec)
    assert vertex_status(state, 0) is VertexStatus.FULL
    assert vertex_status(state, 1) is VertexStatus.HUNGRY
    state.sigma[2] = dec.target(2) - 1
    assert vertex_status(state, 2) is VertexStatus.HUNGRY
    state.sigma[2] = dec.target(2) + 1
    assert vertex_status(state, 2) is VertexStatus.EXCEEDED
    assert not VertexStatus.EXCEEDED.good
    with pytest.raises(ValueError):
        vertex_status(state, 3)


def test_every_graph_on_five_vertices():
    pairs = list(itertools.combinations(range(5), 2))
    for mask in range(1 << len(pairs)):
        graph = Graph(5, [p for k, p in enumerate(pairs) if mask >> k & 1])
        base = TotalWeighting.zero(graph)
        offsets, dec, _ = solve_offsets(graph, base, 1)
        assert verify_offsets(graph, base, 1, offsets, dec).overall


@settings(max_examples=150, deadline=None)
@given(instances(max_n=6))
def test_solver_output_verifies_and_replays(instance):
    graph, base, span = instance
    offsets, dec, trace = solve_offsets(graph, base, span)
    assert verify_offsets(graph, base, span, offsets, dec).overall
    report = replay_trace(graph, base, dec, trace, offsets)
    assert report.overall, report.render()
    for v in graph.vertices():
        heavy = sum(1 for z in [Element.vertex(v)] + [Element.edge(v, u) for u in graph.adjacency[v]]
                    if offsets.is_heavy(z))
        assert heavy == dec.demand(v)


@settings(max_examples=100, deadline=None)
@given(instances(max_n=6))
def test_scaling_and_translation_keep_pattern(instance):
    graph, base, span = instance
    offsets, _, _ = solve_offsets(graph, base, span)
    for c in (Fraction(2), Fraction(1, 3)):
        scaled, _, _ = solve_offsets(graph, base.scaled(c), span * c)
        assert scaled.pattern() == offsets.pattern()
    t = Fraction(7, 5)
    moved_base = base.translated_vertices(t)
    moved, _, _ = solve_offsets(graph, moved_base, span)
    assert moved.pattern() == offsets.pattern()
    assert sigma(graph, moved_base + moved) == [s + t for s in sigma(graph, base + offsets)]


def test_replay_detects_tampering():
    base = TotalWeighting.zero(K3)
    offsets, dec, trace = solve_offsets(K3, base, 1)
    record = trace.iterations[0]
    doubled = replace(record, assignments=record.assignments + [record.assignments[0]])
    report = replay_trace(K3, base, dec, RunTrace(trace.span, [doubled, *trace.iterations[1:]]))
    assert not report.get("monotone-writes").passed

    extra = replace(record, assignments=record.assignments + [("greedy-edge", Element.edge(0, 2))])
    report = replay_trace(K3, base, dec, RunTrace(trace.span, [extra, *trace.iterations[1:]]), offsets)
    assert not report.get("good-after-every-write").passed
    assert not report.get("reproduces").passed

    report = replay_trace(K3, base, dec, RunTrace(trace.span, trace.iterations[1:]))
    assert not report.get("iteration-order").passed
    assert not report.get("complete").passed


def test_trace_json_round_trip():
    graph = gen_named("petersen")
    base = TotalWeighting.zero(graph)
    offsets, dec, trace = solve_offsets(graph, base, 1)
    again = RunTrace.from_json(trace.to_json())
    assert again == trace
    assert replay_trace(graph, base, dec, again, offsets).overall


def test_split_lists():
    lists = ListAssignment({Element.vertex(0): (3, 1), Element.vertex(1): (0, 2), Element.edge(0, 1): (5, 7)})
    base, span = split_lists(K2, lists)
    assert span == 2
    assert base[Element.vertex(0)] == 1
    assert base[Element.edge(0, 1)] == 5


def test_list_errors():
    with pytest.raises(NonUniformSpan):
        split_lists(K2, {Element.vertex(0): (0, 1), Element.vertex(1): (0, 2), Element.edge(0, 1): (0, 1)})
    with pytest.raises(DegenerateList):
        split_lists(K2, {Element.vertex(0): (1, 1), Element.vertex(1): (0, 1), Element.edge(0, 1): (0, 1)})
    with pytest.raises(MissingList):
        split_lists(K2, {Element.vertex(0): (0, 1), Element.vertex(1): (0, 1)})
    with pytest.raises(ValueError):
        split_lists(Graph(1), {Element.vertex(0): (0, 1), Element.vertex(1): (0, 1)})


def test_solve_lists_k2():
    lists = ListAssignment.uniform(K2, 1, 2)
    final = solve_lists(K2, lists)
    assert verify_list_membership(lists, final).overall
    assert verify_proper(K2, final).overall


def test_solve_lists_single_vertex():
    graph = Graph(1)
    final = solve_lists(graph, ListAssignment.uniform(graph, 3, 7))
    assert final[Element.vertex(0)] == 3


@pytest.mark.parametrize("first, second", [(1, 2), (2, 1), ("-1/2", "3/4"), (0, -3)])
def test_any_two_values_on_petersen(first, second):
    graph = gen_named("petersen")
    lists = ListAssignment.uniform(graph, first, second)
    final = solve_lists(graph, lists)
    assert verify_list_membership(lists, final).overall
    assert verify_proper(graph, final).overall


def test_cubic_graphs_with_one_two_lists():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.choice([4, 6, 8, 10, 12, 14])
        graph = gen_regular(n, 3, rng.getrandbits(32))
        lists = ListAssignment.uniform(graph, 1, 2)
        final = solve_lists(graph, lists)
        assert verify_list_membership(lists, final).overall
        assert verify_proper(graph, final).overall


def test_solver_is_deterministic():
    graph = gen_named("hypercube", [3])
    base = TotalWeighting.zero(graph)
    first = solve_offsets(graph, base, 1)
    second = solve_offsets(graph, base, 1)
    assert first[0] == second[0]
    assert first[2].to_json() == second[2].to_json()
