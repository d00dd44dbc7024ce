# tests/test_fuzz.py

import json
from fractions import Fraction

import pytest

from graph_mod import Graph, TotalWeighting
from service import FuzzConfig, check_instance, fuzz_campaign, gen_named, generate_instances, shrink_instance


def test_empty_campaign_passes():
    report = fuzz_campaign(FuzzConfig(count=0))
    assert report.overall
    assert report.total == 0
    assert report.to_json()["failures"] == []


def test_instance_stream_is_reproducible():
    cfg = FuzzConfig(count=20, seed=3, nmax=5)
    first = [(i.graph, i.base, i.span) for i in generate_instances(cfg)]
    second = [(i.graph, i.base, i.span) for i in generate_instances(cfg)]
    assert first == second
    assert all(1 <= g.n <= 5 for g, _, _ in first)


def test_small_campaign_is_clean_and_deterministic():
    cfg = FuzzConfig(count=40, seed=1, nmax=5)
    report = fuzz_campaign(cfg)
    assert report.overall, report.failures
    assert report.passed == 40
    again = fuzz_campaign(cfg)
    assert json.dumps(report.to_json(), sort_keys=True) == json.dumps(again.to_json(), sort_keys=True)


def test_check_instance_runs_every_check():
    graph = gen_named("cycle", [5])
    report = check_instance(graph, TotalWeighting.zero(graph), Fraction(1, 3))
    names = {c.name for c in report.checks}
    assert {"solve", "offsets:targets", "final:proper", "replay:monotone-writes", "oracle-contains"} <= names
    assert report.overall


def test_check_instance_skips_oracle_above_cap():
    graph = gen_named("complete", [7])
    report = check_instance(graph, TotalWeighting.zero(graph), 1)
    assert report.overall
    assert "oracle-feasible" not in {c.name for c in report.checks}


def test_shrink_prefers_edges_then_vertices():
    graph = gen_named("petersen")

    def has_edge(g, b, s):
        return g.m >= 1

    small, base = shrink_instance(graph, TotalWeighting.zero(graph), 1, fails=has_edge)
    assert (small.n, small.m) == (2, 1)
    assert set(base) == set(small.elements())


def test_shrink_keeps_base_values():
    graph = Graph(3, [(0, 1), (1, 2)])
    base = TotalWeighting({z: Fraction(i) for i, z in enumerate(graph.elements())})

    def needs_vertex_two(g, b, s):
        return g.n >= 3

    small, small_base = shrink_instance(graph, base, 1, fails=needs_vertex_two)
    assert small.m == 0
    assert [small_base[z] for z in small.elements()] == [0, 1, 2]


@pytest.mark.slow
def test_default_campaign():
    report = fuzz_campaign(FuzzConfig(count=500, seed=42, nmax=6))
    assert report.overall, report.failures[:1]
    assert report.total == 500
