# service/verify.py

import logging
from fractions import Fraction

from graph_mod import Element, Graph, UndefinedWeightError, format_rational, parse_rational

from .report import Report, VerificationReport

logger = logging.getLogger(__name__)


def _degrees(graph: Graph, *weightings) -> list[Fraction]:
    # Пересчёт с нуля, без состояния решателя
    for z in graph.elements():
        for w in weightings:
            if z not in w:
                raise UndefinedWeightError(z)
    sigma = [sum((w[Element.vertex(v)] for w in weightings), Fraction(0)) for v in graph.vertices()]
    for u, v in graph.edges:
        edge = Element.edge(u, v)
        value = sum((w[edge] for w in weightings), Fraction(0))
        sigma[u] += value
        sigma[v] += value
    return sigma


def _proper_check(graph: Graph, sigma, report: Report) -> None:
    clashes = [
        {"edge": f"{u}-{v}", "sigma": format_rational(sigma[u])}
        for u, v in graph.edges if sigma[u] == sigma[v]
    ]
    report.add("proper", not clashes, clashes)


def verify_proper(graph: Graph, weights) -> VerificationReport:
    report = Report()
    _proper_check(graph, _degrees(graph, weights), report)
    return report


def verify_offsets(graph: Graph, base, span, offsets, dec) -> VerificationReport:
    """Проверяет сдвиги из {0, a}, попадание в цели уровней и правильность base + offsets"""
    span = parse_rational(span)
    report = Report()
    off_range = [
        {"element": z.key(), "value": format_rational(offsets[z])}
        for z in graph.elements() if z in offsets and offsets[z] not in (0, span)
    ]
    report.add("offset-range", not off_range, off_range[:1])
    sigma = _degrees(graph, base, offsets)
    missed = [
        {"vertex": v, "sigma": format_rational(sigma[v]), "target": format_rational(dec.target(v))}
        for v in graph.vertices() if sigma[v] != dec.target(v)
    ]
    report.add("targets", not missed, missed)
    _proper_check(graph, sigma, report)
    if not report.overall:
        logger.warning(f"verify_offsets failed: {[c.name for c in report.failures()]}")
    return report


def verify_list_membership(lists, weights) -> VerificationReport:
    if set(lists) != set(weights):
        diff = sorted(str(z) for z in set(lists).symmetric_difference(weights))
        raise ValueError(f"Lists and weighting cover different elements: {diff}")
    report = Report()
    outside = [
        {"element": z.key(), "value": format_rational(weights[z]),
         "list": [format_rational(x) for x in lists[z]]}
        for z in sorted(lists) if parse_rational(weights[z]) not in {parse_rational(x) for x in lists[z]}
    ]
    report.add("list-membership", not outside, outside)
    return report
