# service/levels.py

import logging
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from graph_mod import Graph, format_rational, induced, parse_rational, weighted_degree

from .errors import InternalInvariantViolation, InvalidSpanError
from .mwis import is_dominating, mwis_exact, phi_maximum_set, set_weight
from .report import Report

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LevelRecord:
    q: Fraction
    members: frozenset[int]
    phi: Mapping[int, int]
    carrier: frozenset[int]

    def positive(self, at_least: int = 1) -> frozenset[int]:
        """Вершины уровня со спросом не меньше `at_least`"""
        return frozenset(v for v in self.members if self.phi[v] >= at_least)

    def to_json(self) -> dict:
        return {
            "q": format_rational(self.q),
            "members": sorted(self.members),
            "carrier": sorted(self.carrier),
            "phi": {str(v): self.phi[v] for v in sorted(self.phi)},
        }


@dataclass(frozen=True)
class LevelDecomposition:
    """Цели q_0 < q_1 < ..., независимые множества I_i и их спрос.

    Уровни нумеруются с 0. `height` равно числу уровней до последнего
    непустого включительно.
    """
    span: Fraction
    targets: tuple[Fraction, ...]
    levels: tuple[LevelRecord, ...]
    height: int
    level_of: Mapping[int, int]
    base_degrees: tuple[Fraction, ...]

    def target(self, v: int) -> Fraction:
        return self.targets[self.level_of[v]]

    def demand(self, v: int) -> int:
        return self.levels[self.level_of[v]].phi[v]

    def steps(self, v: int, q: Fraction) -> int | None:
        """j, для которого q = sigma_w0(v) + j*a, иначе None"""
        ratio = (q - self.base_degrees[v]) / self.span
        return ratio.numerator if ratio.denominator == 1 else None

    def has_target(self, graph: Graph, v: int, i: int) -> bool:
        """q_i входит в множество целей v"""
        j = self.steps(v, self.targets[i])
        return j is not None and 0 <= j <= graph.degree(v) + 1

    def to_json(self) -> dict:
        return {
            "span": format_rational(self.span),
            "targets": [format_rational(q) for q in self.targets],
            "height": self.height,
            "levels": [record.to_json() for record in self.levels],
            "level_of": {str(v): self.level_of[v] for v in sorted(self.level_of)},
        }


def check_span(span) -> Fraction:
    span = parse_rational(span)
    if span <= 0:
        raise InvalidSpanError(span)
    return span


def target_set(graph: Graph, base, span, v: int) -> list[Fraction]:
    span = check_span(span)
    start = weighted_degree(graph, base, v)
    return [start + j * span for j in range(graph.degree(v) + 2)]


def build_levels(graph: Graph, base, span, deadline: float | None = None) -> LevelDecomposition:
    span = check_span(span)
    degrees = tuple(weighted_degree(graph, base, v) for v in graph.vertices())
    targets = sorted({q for v in graph.vertices() for q in target_set(graph, base, span, v)})
    covered = set()
    level_of = {}
    records = []
    for i, q in enumerate(targets):
        carrier = []
        phi = {}
        for v in graph.vertices():
            if v in covered:
                continue
            ratio = (q - degrees[v]) / span
            if ratio.denominator == 1 and 0 <= ratio <= graph.degree(v) + 1:
                carrier.append(v)
                phi[v] = ratio.numerator
        members = frozenset()
        if carrier:
            sub = induced(graph, carrier)
            if i == 0:
                # нижний уровень: максимальное по мощности независимое множество
                local = phi_maximum_set(sub.graph, [1] * sub.graph.n, deadline)
            else:
                local = phi_maximum_set(sub.graph, [phi[v] for v in sub.ids], deadline)
            members = sub.lift(local)
        for v in members:
            level_of[v] = i
        covered |= members
        records.append(LevelRecord(q, members, MappingProxyType(phi), frozenset(carrier)))
        logger.debug(f"level {i}: q={q}, carrier={len(carrier)}, members={sorted(members)}")

    if len(covered) != graph.n:
        missing = sorted(set(graph.vertices()) - covered)
        raise InternalInvariantViolation(f"Levels do not cover vertices {missing}",
                                         {"missing": missing})
    height = max((i for i, record in enumerate(records) if record.members), default=-1) + 1
    for v, i in level_of.items():
        if records[i].phi[v] < 0:
            raise InternalInvariantViolation(f"Negative demand at vertex {v}", {"vertex": v})
    return LevelDecomposition(
        span=span,
        targets=tuple(targets),
        levels=tuple(records),
        height=height,
        level_of=MappingProxyType(dict(level_of)),
        base_degrees=degrees,
    )


def validate_levels(graph: Graph, base, span, dec: LevelDecomposition) -> Report:
    """Заново проверяет все свойства разбиения, со свидетелями"""
    span = check_span(span)
    report = Report()
    degrees = [weighted_degree(graph, base, v) for v in graph.vertices()]
    target_sets = [
        {degrees[v] + j * span for j in range(graph.degree(v) + 2)} for v in graph.vertices()
    ]

    unsorted = [i for i in range(len(dec.targets) - 1) if not dec.targets[i] < dec.targets[i + 1]]
    report.add("targets-sorted", not unsorted,
               unsorted and [format_rational(dec.targets[unsorted[0]]),
                             format_rational(dec.targets[unsorted[0] + 1])])
    expected = set().union(*target_sets) if target_sets else set()
    diff = expected.symmetric_difference(dec.targets)
    report.add("targets-match", not diff and len(dec.targets) == len(expected),
               sorted(format_rational(q) for q in diff))
    report.add("levels-count", len(dec.levels) == len(dec.targets),
               {"levels": len(dec.levels), "targets": len(dec.targets)})
    count = min(len(dec.levels), len(dec.targets))

    seen = {}
    repeated = []
    for i in range(count):
        for v in sorted(dec.levels[i].members):
            if v in seen:
                repeated.append(v)
            seen[v] = i
    missing = [v for v in graph.vertices() if v not in seen]
    report.add("partition", not repeated and not missing, {"missing": missing, "repeated": repeated})
    beyond = [v for v, i in seen.items() if i >= dec.height]
    top_filled = dec.height == 0 or (dec.height <= count and bool(dec.levels[dec.height - 1].members))
    report.add("height", not beyond and top_filled, {"beyond": beyond, "height": dec.height})
    wrong_map = [v for v, i in seen.items() if dec.level_of.get(v) != i]
    report.add("level-map", not wrong_map, wrong_map)

    bad_edges = [
        (u, v) for i in range(count) for u, v in graph.edges
        if u in dec.levels[i].members and v in dec.levels[i].members
    ]
    report.add("independent", not bad_edges, bad_edges[:1])

    bad_phi = []
    for i in range(count):
        record = dec.levels[i]
        for v in sorted(record.members):
            ratio = (dec.targets[i] - degrees[v]) / span
            if ratio.denominator != 1 or not 0 <= ratio <= graph.degree(v) + 1 \
                    or (i > 0 and record.phi.get(v) != ratio.numerator) \
                    or (i == 0 and ratio != 0):
                bad_phi.append(v)
    report.add("demand", not bad_phi, bad_phi)

    covered = set()
    bad_carrier = []
    not_maximum = []
    for i in range(count):
        record = dec.levels[i]
        carrier = {v for v in graph.vertices() if v not in covered and dec.targets[i] in target_sets[v]}
        if carrier != set(record.carrier) or not record.members <= record.carrier:
            bad_carrier.append(i)
        elif carrier:
            sub = induced(graph, carrier)
            local = {v: k for k, v in enumerate(sub.ids)}
            chosen = [local[v] for v in record.members]
            if i == 0:
                weights = [1] * sub.graph.n
            else:
                weights = [int(record.phi[v]) for v in sub.ids]
            best = set_weight(weights, mwis_exact(sub.graph, weights))
            if set_weight(weights, chosen) != best or not is_dominating(sub.graph, chosen) \
                    or not sub.graph.is_independent(chosen):
                not_maximum.append(i)
        covered |= record.members
    report.add("carriers", not bad_carrier, bad_carrier[:1])
    report.add("phi-maximum", not not_maximum, not_maximum[:1])

    lonely = []
    for i in range(count):
        for v in sorted(dec.levels[i].carrier):
            for j in range(i):
                if dec.targets[j] in target_sets[v] and \
                        not any(u in dec.levels[j].members for u in graph.adjacency[v]):
                    lonely.append({"vertex": v, "level": i, "lower": j})
    report.add("lower-neighbors", not lonely, lonely[:1])

    heavy_low = [v for i in range(min(2, count)) for v in dec.levels[i].members
                 if dec.levels[i].phi.get(v, 0) >= 2]
    report.add("low-levels-demand", not heavy_low, heavy_low)
    return report
