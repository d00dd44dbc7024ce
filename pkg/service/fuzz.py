# service/fuzz.py

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from config import Config
from graph_mod import Element, Graph, TotalWeighting, format_graph, format_rational, induced

from .errors import InternalInvariantViolation, MwisBudgetExceeded
from .oracle import exhaustive_offsets, gen_random
from .report import Report
from .verify import verify_offsets, verify_proper
from .weighting import replay_trace, solve_offsets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FuzzConfig:
    count: int = Config.FUZZ_COUNT
    seed: int = Config.FUZZ_SEED
    nmax: int = Config.FUZZ_NMAX
    pset: tuple[Fraction, ...] = Config.FUZZ_PSET
    spans: tuple[Fraction, ...] = Config.FUZZ_SPANS
    base_pool: tuple[Fraction, ...] = Config.FUZZ_BASE_POOL
    max_elements: int = Config.ORACLE_MAX_ELEMENTS

    def __post_init__(self):
        if self.count < 0:
            raise ValueError(f"count must be non-negative, got {self.count}")
        if self.nmax < 1:
            raise ValueError(f"nmax must be at least 1, got {self.nmax}")
        if not self.pset or not self.spans or not self.base_pool:
            raise ValueError("pset, spans and base_pool must be non-empty")
        if any(s <= 0 for s in self.spans):
            raise ValueError(f"spans must be positive, got {[str(s) for s in self.spans]}")

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "seed": self.seed,
            "nmax": self.nmax,
            "pset": [format_rational(p) for p in self.pset],
            "spans": [format_rational(a) for a in self.spans],
            "base_pool": [format_rational(x) for x in self.base_pool],
            "max_elements": self.max_elements,
        }


@dataclass(frozen=True)
class FuzzInstance:
    index: int
    graph: Graph
    base: TotalWeighting
    span: Fraction

    def bundle(self) -> dict:
        return {"graph": format_graph(self.graph, f"fuzz instance {self.index}"),
                "weighting": self.base.to_json(self.span)}


def generate_instances(cfg: FuzzConfig):
    """Одинаковая конфигурация даёт одинаковый поток"""
    rng = random.Random(cfg.seed)
    for index in range(cfg.count):
        n = rng.randint(1, cfg.nmax)
        p = rng.choice(cfg.pset)
        graph = gen_random(n, p, rng.getrandbits(32))
        span = rng.choice(cfg.spans)
        base = TotalWeighting({z: rng.choice(cfg.base_pool) for z in graph.elements()})
        yield FuzzInstance(index, graph, base, span)


def check_instance(graph: Graph, base, span, max_elements: int = Config.ORACLE_MAX_ELEMENTS) -> Report:
    """Решатель, проверки, повтор трассы и полный перебор, если экземпляр мал"""
    report = Report()
    try:
        offsets, dec, trace = solve_offsets(graph, base, span)
    except (InternalInvariantViolation, MwisBudgetExceeded) as e:
        report.add("solve", False, str(e))
        return report
    report.add("solve", True)
    report.extend(verify_offsets(graph, base, span, offsets, dec), "offsets:")
    combined = {z: base[z] + offsets[z] for z in graph.elements()}
    report.extend(verify_proper(graph, combined), "final:")
    report.extend(replay_trace(graph, base, dec, trace, offsets), "replay:")
    if len(graph.elements()) <= max_elements:
        oracle = exhaustive_offsets(graph, base, span, max_elements)
        report.add("oracle-feasible", oracle.feasible, {"count": oracle.count})
        report.add("oracle-contains", oracle.contains(offsets), sorted(z.key() for z in offsets.heavy_elements()))
    else:
        logger.warning(f"oracle skipped: {len(graph.elements())} elements above the cap {max_elements}")
    return report


def _fails(graph, base, span, max_elements):
    return not check_instance(graph, base, span, max_elements).overall


def _without_vertex(graph: Graph, base, v: int):
    sub = induced(graph, [u for u in graph.vertices() if u != v])
    values = {Element.vertex(k): base[Element.vertex(x)] for k, x in enumerate(sub.ids)}
    for a, b in sub.graph.edges:
        values[Element.edge(a, b)] = base[Element.edge(sub.ids[a], sub.ids[b])]
    return sub.graph, TotalWeighting(values)


def shrink_instance(graph: Graph, base, span, fails=None, max_elements: int = Config.ORACLE_MAX_ELEMENTS):
    """Удаляет рёбра, затем вершины, пока экземпляр продолжает падать"""
    if fails is None:
        def fails(g, b, s):
            return _fails(g, b, s, max_elements)
    base = TotalWeighting({z: base[z] for z in graph.elements()})
    changed = True
    while changed:
        changed = False
        for edge in graph.edges:
            smaller = Graph(graph.n, [e for e in graph.edges if e != edge])
            smaller_base = TotalWeighting({z: base[z] for z in smaller.elements()})
            if fails(smaller, smaller_base, span):
                graph, base, changed = smaller, smaller_base, True
                break
    changed = True
    while changed and graph.n > 1:
        changed = False
        for v in graph.vertices():
            smaller, smaller_base = _without_vertex(graph, base, v)
            if fails(smaller, smaller_base, span):
                graph, base, changed = smaller, smaller_base, True
                break
    logger.info(f"shrunk failing instance to n={graph.n}, m={graph.m}")
    return graph, base


@dataclass
class FuzzReport:
    config: FuzzConfig
    total: int = 0
    passed: int = 0
    failures: list[dict] = field(default_factory=list)
    minimal: dict | None = None

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def overall(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "overall": self.overall,
            "failures": self.failures,
            "minimal": self.minimal,
        }

    def render(self) -> str:
        return f"fuzz: {self.total} instances, {self.passed} passed, {self.failed} failed"


def fuzz_campaign(cfg: FuzzConfig) -> FuzzReport:
    report = FuzzReport(cfg)
    first_failure = None
    for instance in generate_instances(cfg):
        result = check_instance(instance.graph, instance.base, instance.span, cfg.max_elements)
        report.total += 1
        if result.overall:
            report.passed += 1
            continue
        logger.error(f"fuzz instance {instance.index} failed: {[c.name for c in result.failures()]}")
        report.failures.append({
            "index": instance.index,
            "checks": [c.to_json() for c in result.failures()],
            "bundle": instance.bundle(),
        })
        if first_failure is None:
            first_failure = instance
    if first_failure is not None:
        graph, base = shrink_instance(first_failure.graph, first_failure.base, first_failure.span,
                                      max_elements=cfg.max_elements)
        report.minimal = FuzzInstance(first_failure.index, graph, base, first_failure.span).bundle()
    logger.info(report.render())
    return report
