# service/weighting.py

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping

from graph_mod import (
    Element,
    Graph,
    ListAssignment,
    TotalWeighting,
    UndefinedWeightError,
    format_graph,
    parse_rational,
    weighted_degree,
)

from .errors import DegenerateList, InternalInvariantViolation, MissingList, NoAugmentingPath, NonUniformSpan
from .levels import LevelDecomposition, build_levels
from .report import Report
from .verify import verify_offsets
from .wellgraph import WellInstance, check_preconditions, find_well_subgraph

logger = logging.getLogger(__name__)

GREEDY_EDGE = "greedy-edge"
GREEDY_VERTEX = "greedy-vertex"
FOREST_EDGE = "forest-edge"
OWN_VERTEX = "own-vertex"


class VertexStatus(Enum):
    FULL = "full"
    HUNGRY = "hungry"
    EXCEEDED = "exceeded"

    @property
    def good(self) -> bool:
        return self is not VertexStatus.EXCEEDED


class OffsetWeighting(TotalWeighting):
    """Поправка {0, a}: лёгкие элементы несут 0, тяжёлые несут шаг"""

    def __init__(self, span, values: Mapping[Element, object]):
        super().__init__(values)
        self.span = parse_rational(span)

    @classmethod
    def from_heavy(cls, graph: Graph, span, heavy) -> "OffsetWeighting":
        span = parse_rational(span)
        heavy = set(heavy)
        return cls(span, {z: span if z in heavy else Fraction(0) for z in graph.elements()})

    def is_heavy(self, element: Element) -> bool:
        return self[element] == self.span

    def heavy_elements(self) -> frozenset[Element]:
        return frozenset(z for z in self if self.is_heavy(z))

    def pattern(self) -> tuple[bool, ...]:
        return tuple(self.is_heavy(z) for z in self)

    def __eq__(self, other):
        if isinstance(other, OffsetWeighting):
            return self.span == other.span and dict(self.items()) == dict(other.items())
        return NotImplemented

    def __hash__(self):
        return hash((self.span, super().__hash__()))

    def to_json(self, span=None) -> dict:
        return super().to_json(self.span if span is None else span)


@dataclass
class IterationRecord:
    level: int
    uorder: list[int] = field(default_factory=list)
    assignments: list[tuple[str, Element]] = field(default_factory=list)

    def _pick(self, step):
        return [z for kind, z in self.assignments if kind == step]

    @property
    def greedy_edges(self) -> list[tuple[int, int]]:
        return [z.id for z in self._pick(GREEDY_EDGE)]

    @property
    def greedy_vertices(self) -> list[int]:
        return [z.id for z in self._pick(GREEDY_VERTEX)]

    @property
    def forest(self) -> list[tuple[int, int]]:
        return [z.id for z in self._pick(FOREST_EDGE)]

    @property
    def own_vertices(self) -> list[int]:
        return [z.id for z in self._pick(OWN_VERTEX)]

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "uorder": list(self.uorder),
            "greedy_edges": [list(e) for e in self.greedy_edges],
            "greedy_vertices": self.greedy_vertices,
            "forest": [list(e) for e in self.forest],
            "own_vertices": self.own_vertices,
            "assignments": [[kind, z.key()] for kind, z in self.assignments],
        }

    @classmethod
    def from_json(cls, data: dict) -> "IterationRecord":
        return cls(
            level=int(data["level"]),
            uorder=[int(u) for u in data.get("uorder", [])],
            assignments=[(kind, Element.from_key(key)) for kind, key in data.get("assignments", [])],
        )


@dataclass
class RunTrace:
    span: Fraction
    iterations: list[IterationRecord] = field(default_factory=list)

    def assignments(self) -> list[tuple[int, str, Element]]:
        return [(r.level, kind, z) for r in self.iterations for kind, z in r.assignments]

    def to_json(self) -> dict:
        return {"span": str(self.span), "iterations": [r.to_json() for r in self.iterations]}

    @classmethod
    def from_json(cls, data: dict) -> "RunTrace":
        return cls(parse_rational(data["span"]),
                   [IterationRecord.from_json(r) for r in data.get("iterations", [])])


class RunState:
    """Текущие сдвиги и взвешенные степени при обходе уровней сверху вниз"""

    def __init__(self, graph: Graph, base, dec: LevelDecomposition, trace: RunTrace | None = None):
        self.graph = graph
        self.base = base
        self.dec = dec
        self.span = dec.span
        self.sigma = list(dec.base_degrees)
        self.heavy = set()
        self.trace = trace if trace is not None else RunTrace(dec.span)

    def status(self, v: int) -> VertexStatus:
        target = self.dec.target(v)
        if self.sigma[v] == target:
            return VertexStatus.FULL
        if self.sigma[v] < target:
            return VertexStatus.HUNGRY
        return VertexStatus.EXCEEDED

    def is_hungry(self, v: int) -> bool:
        return self.status(v) is VertexStatus.HUNGRY

    def offsets(self) -> OffsetWeighting:
        return OffsetWeighting.from_heavy(self.graph, self.span, self.heavy)

    def make_heavy(self, element: Element, record: IterationRecord, step: str) -> bool:
        if element in self.heavy:
            return False
        self.heavy.add(element)
        touched = [element.id] if element.is_vertex else list(element.id)
        for v in touched:
            self.sigma[v] += self.span
        record.assignments.append((step, element))
        for v in touched:
            if self.status(v) is VertexStatus.EXCEEDED:
                raise self.violation(f"Vertex {v} exceeds its target after weighting {element}",
                                     vertex=v, element=element.key())
        return True

    def violation(self, message: str, **details) -> InternalInvariantViolation:
        dump = {
            "graph": format_graph(self.graph),
            "base": TotalWeighting(self.base).to_json(self.span),
            "trace": self.trace.to_json(),
            **details,
        }
        logger.error(f"internal invariant violated: {message}")
        return InternalInvariantViolation(message, dump)


def vertex_status(state: RunState, v: int) -> VertexStatus:
    state.graph.check_vertex(v)
    return state.status(v)


def _run_iteration(state: RunState, i: int) -> None:
    graph, dec = state.graph, state.dec
    record = IterationRecord(level=i)
    state.trace.iterations.append(record)
    upper = sorted(
        v for t in range(i + 1, dec.height) for v in dec.levels[t].members if dec.has_target(graph, v, i)
    )
    upper_set = set(upper)

    # рёбра между голодными вершинами верхних уровней
    for u in upper:
        for v in graph.adjacency[u]:
            if v > u and v in upper_set:
                edge = Element.edge(u, v)
                if edge not in state.heavy and state.is_hungry(u) and state.is_hungry(v):
                    state.make_heavy(edge, record, GREEDY_EDGE)
    for v in upper:
        if state.is_hungry(v):
            state.make_heavy(Element.vertex(v), record, GREEDY_VERTEX)

    uorder = sorted((v for v in upper if state.is_hungry(v)), key=lambda v: (dec.level_of[v], v))
    record.uorder = uorder
    level = dec.levels[i]
    if uorder:
        iside = sorted(level.positive(1))
        phi = {v: level.phi[v] for v in (*iside, *uorder)}
        inst = WellInstance.from_graph(graph, iside, uorder, phi)
        pre = check_preconditions(inst)
        if not pre.overall:
            raise state.violation(f"U-order precondition fails at level {i}",
                                  level=i, failures=[c.to_json() for c in pre.failures()])
        try:
            forest = find_well_subgraph(inst)
        except NoAugmentingPath as e:
            raise state.violation(f"No well subgraph at level {i}: {e}", level=i,
                                  certificate=e.to_json()) from e
        for x, u in sorted(forest.edges):
            state.make_heavy(Element.edge(x, u), record, FOREST_EDGE)

    for v in sorted(level.members):
        if state.is_hungry(v):
            state.make_heavy(Element.vertex(v), record, OWN_VERTEX)
    logger.debug(f"iteration {i}: upper={len(upper)}, U={uorder}, assignments={len(record.assignments)}")


def _check_base(graph: Graph, base) -> None:
    if isinstance(base, TotalWeighting):
        base.check_total(graph)
        return
    for z in graph.elements():
        if z not in base:
            raise UndefinedWeightError(z)


def solve_offsets(graph: Graph, base, span, deadline: float | None = None):
    """Возвращает (offsets, levels, trace), где sigma_{w0+offsets}(v) равна цели уровня v"""
    _check_base(graph, base)
    dec = build_levels(graph, base, span, deadline)
    state = RunState(graph, base, dec)
    for i in range(dec.height - 2, -1, -1):
        _run_iteration(state, i)

    unfinished = [v for v in graph.vertices() if state.status(v) is not VertexStatus.FULL]
    if unfinished:
        raise state.violation(f"Vertices {unfinished} are not full after the last level", unfinished=unfinished)
    offsets = state.offsets()
    report = verify_offsets(graph, base, dec.span, offsets, dec)
    if not report.overall:
        raise state.violation("Final verification failed", report=report.to_json())
    logger.debug(f"solve_offsets: n={graph.n}, m={graph.m}, heavy={len(state.heavy)}")
    return offsets, dec, state.trace


def split_lists(graph: Graph, lists) -> tuple[TotalWeighting, Fraction]:
    """Базовая разметка из минимумов списков и общий шаг"""
    known = set(graph.elements())
    extra = [z for z in lists if z not in known]
    if extra:
        raise ValueError(f"Lists given for elements outside the graph: {[str(z) for z in extra]}")
    lows = {}
    span = None
    first = None
    for z in graph.elements():
        if z not in lists:
            raise MissingList(z)
        a, b = (parse_rational(x) for x in lists[z])
        low, high = min(a, b), max(a, b)
        if low == high:
            raise DegenerateList(z)
        if span is None:
            span, first = high - low, z
        elif high - low != span:
            raise NonUniformSpan(first, z, span, high - low)
        lows[z] = low
    return TotalWeighting(lows), (span if span is not None else Fraction(1))


def solve_lists(graph: Graph, lists: ListAssignment | Mapping, deadline: float | None = None) -> TotalWeighting:
    base, span = split_lists(graph, lists)
    offsets, _, _ = solve_offsets(graph, base, span, deadline)
    return base + offsets


def _progress_gaps(graph: Graph, dec: LevelDecomposition, heavy, sigma, i: int) -> list[dict]:
    gaps = []
    for t in range(i + 2, dec.height):
        for v in sorted(dec.levels[t].members):
            if not dec.has_target(graph, v, i) or sigma[v] == dec.targets[t]:
                continue
            for r in range(i + 1, t):
                if not dec.has_target(graph, v, r):
                    continue
                linked = any(Element.edge(v, x) in heavy
                             for x in graph.adjacency[v] if x in dec.levels[r].members)
                if not linked:
                    gaps.append({"vertex": v, "level": t, "missing": r, "iteration": i})
    return gaps


def replay_trace(graph: Graph, base, dec: LevelDecomposition, trace: RunTrace,
                 offsets: OffsetWeighting | None = None) -> Report:
    """Повторяет все записанные назначения и заново проверяет условия прогона"""
    report = Report()
    sigma = [weighted_degree(graph, base, v) for v in graph.vertices()]
    heavy = set()
    repeated, exceeded, gaps = [], [], []
    order = [record.level for record in trace.iterations]
    report.add("iteration-order", order == list(range(dec.height - 2, -1, -1)), order)
    for record in trace.iterations:
        gaps.extend(_progress_gaps(graph, dec, heavy, sigma, record.level))
        for step, z in record.assignments:
            if z in heavy:
                repeated.append(z.key())
                continue
            heavy.add(z)
            touched = [z.id] if z.is_vertex else list(z.id)
            for v in touched:
                sigma[v] += trace.span
                if sigma[v] > dec.target(v):
                    exceeded.append({"vertex": v, "element": z.key(), "step": step, "level": record.level})
    report.add("monotone-writes", not repeated, repeated)
    report.add("good-after-every-write", not exceeded, exceeded[:1])
    report.add("lower-level-progress", not gaps, gaps[:1])
    hungry = [v for v in graph.vertices() if sigma[v] != dec.target(v)]
    report.add("complete", not hungry, hungry)
    if offsets is not None:
        report.add("reproduces", heavy == set(offsets.heavy_elements()),
                   sorted(z.key() for z in heavy.symmetric_difference(offsets.heavy_elements())))
    return report
