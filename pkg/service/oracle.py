# service/oracle.py

import logging
import random
from collections import defaultdict
from dataclasses import dataclass

import networkx as nx
import numpy as np

from config import Config
from families import from_networkx, get_graph_family
from graph_mod import Graph, parse_rational, weighted_degree

from .errors import InstanceTooLargeError, RegularGenerationError
from .levels import check_span
from .verify import verify_proper
from .weighting import OffsetWeighting

logger = logging.getLogger(__name__)

CHUNK = 1 << 16


@dataclass(frozen=True)
class OracleResult:
    graph: Graph
    base: object
    span: object
    first: OffsetWeighting | None
    count: int
    total: int

    @property
    def feasible(self) -> bool:
        return self.count > 0

    def contains(self, offsets: OffsetWeighting) -> bool:
        """offsets входит в число найденных правильных назначений"""
        if any(offsets[z] not in (0, self.span) for z in self.graph.elements()):
            return False
        combined = {z: self.base[z] + offsets[z] for z in self.graph.elements()}
        return verify_proper(self.graph, combined).overall

    def summary(self) -> str:
        return f"feasible, count={self.count}" if self.feasible else "infeasible, count=0"


def _incidence(graph: Graph) -> np.ndarray:
    elements = graph.elements()
    matrix = np.zeros((len(elements), graph.n), dtype=np.int64)
    for k, z in enumerate(elements):
        for v in ([z.id] if z.is_vertex else z.id):
            matrix[k, v] = 1
    return matrix


def exhaustive_offsets(graph: Graph, base, span, max_elements: int = Config.ORACLE_MAX_ELEMENTS) -> OracleResult:
    """Считает все правильные назначения сдвигов {0, a} и запоминает лексикографически первое.

    Элемент 0 старший бит кода, поэтому коды по возрастанию идут
    в лексикографическом порядке элементов, лёгкий раньше тяжёлого.
    """
    span = check_span(span)
    elements = graph.elements()
    size = len(elements)
    if size > max_elements:
        raise InstanceTooLargeError(size, max_elements)
    degrees = [weighted_degree(graph, base, v) for v in graph.vertices()]

    # s_u - s_v == delta is the only way an edge can clash
    constraints = []
    for u, v in graph.edges:
        delta = (degrees[v] - degrees[u]) / span
        if delta.denominator == 1:
            constraints.append((u, v, delta.numerator))

    matrix = _incidence(graph)
    shifts = np.arange(size - 1, -1, -1, dtype=np.int64)
    total = 1 << size
    count = 0
    first_code = None
    for start in range(0, total, CHUNK):
        codes = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        bits = (codes[:, None] >> shifts) & 1
        stars = bits @ matrix
        ok = np.ones(len(codes), dtype=bool)
        for u, v, delta in constraints:
            ok &= (stars[:, u] - stars[:, v]) != delta
        count += int(ok.sum())
        if first_code is None and ok.any():
            first_code = int(codes[int(np.argmax(ok))])

    first = None
    if first_code is not None:
        heavy = [z for k, z in enumerate(elements) if (first_code >> (size - 1 - k)) & 1]
        first = OffsetWeighting.from_heavy(graph, span, heavy)
    logger.debug(f"oracle: {size} elements, {len(constraints)} constraints, count={count}")
    return OracleResult(graph, base, span, first, count, total)


def gen_named(name: str, params=()) -> Graph:
    family = get_graph_family(name)()
    return family.build(*params)


def gen_random(n: int, p, seed: int) -> Graph:
    if n < 0:
        raise ValueError(f"Vertex count must be non-negative, got {n}")
    p = parse_rational(p)
    if not 0 <= p <= 1:
        raise ValueError(f"Edge probability must lie in [0, 1], got {p}")
    g = nx.gnp_random_graph(n, float(p), seed=seed)
    g.add_nodes_from(range(n))
    return from_networkx(g)


def gen_regular(n: int, d: int, seed: int, max_restarts: int = Config.REGULAR_MAX_RESTARTS) -> Graph:
    """Модель спаривания: d полурёбер на вершину, перемешать, соединить, конфликтные переиграть"""
    if (n * d) % 2 != 0:
        raise ValueError("n * d must be even")
    if not 0 <= d < n:
        raise ValueError("the 0 <= d < n inequality must be satisfied")
    rng = random.Random(seed)

    def _suitable(edges, potential_edges):
        if not potential_edges:
            return True
        for s1 in potential_edges:
            for s2 in potential_edges:
                if s1 == s2:
                    break
                if (min(s1, s2), max(s1, s2)) not in edges:
                    return True
        return False

    def _try_creation():
        edges = set()
        stubs = list(range(n)) * d
        while stubs:
            potential_edges = defaultdict(int)
            rng.shuffle(stubs)
            stubiter = iter(stubs)
            for s1, s2 in zip(stubiter, stubiter):
                if s1 > s2:
                    s1, s2 = s2, s1
                if s1 != s2 and (s1, s2) not in edges:
                    edges.add((s1, s2))
                else:
                    potential_edges[s1] += 1
                    potential_edges[s2] += 1
            if not _suitable(edges, potential_edges):
                return None
            stubs = [node for node, potential in sorted(potential_edges.items()) for _ in range(potential)]
        return edges

    for attempt in range(max_restarts):
        edges = _try_creation()
        if edges is not None:
            logger.debug(f"gen_regular: n={n}, d={d}, attempts={attempt + 1}")
            return Graph(n, sorted(edges))
    raise RegularGenerationError(n, d, max_restarts)
