# service/mwis.py

import logging
import time
from typing import Mapping, Sequence

from config import Config
from graph_mod import Graph, GraphTooLargeError

from .errors import MwisBudgetExceeded

logger = logging.getLogger(__name__)

# φ задаётся словарём или списком по номерам вершин
PhiColoring = Mapping[int, int] | Sequence[int]


def _phi_list(graph: Graph, phi: PhiColoring) -> list[int]:
    if isinstance(phi, Mapping):
        missing = [v for v in graph.vertices() if v not in phi]
        if missing:
            raise ValueError(f"phi is undefined on vertices {missing}")
        values = [phi[v] for v in graph.vertices()]
    else:
        values = list(phi)
        if len(values) != graph.n:
            raise ValueError(f"phi has {len(values)} values for {graph.n} vertices")
    for v, value in enumerate(values):
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"phi({v}) must be a non-negative integer, got {value!r}")
    return values


def mwis_bruteforce(graph: Graph, phi: PhiColoring, max_vertices: int = Config.BRUTEFORCE_MAX_VERTICES):
    """Перебирает все независимые множества; возвращает (вес, лексикографически наименьшее оптимальное)"""
    if graph.n > max_vertices:
        raise GraphTooLargeError(graph.n, max_vertices)
    weights = _phi_list(graph, phi)
    adjacency = [set(graph.adjacency[v]) for v in graph.vertices()]
    best = [-1, ()]
    chosen = []

    def walk(v, blocked, weight):
        if v == graph.n:
            witness = tuple(chosen)
            if weight > best[0] or (weight == best[0] and witness < best[1]):
                best[0], best[1] = weight, witness
            return
        if v not in blocked:
            chosen.append(v)
            walk(v + 1, blocked | adjacency[v], weight + weights[v])
            chosen.pop()
        walk(v + 1, blocked, weight)

    walk(0, frozenset(), 0)
    return best[0], frozenset(best[1])


def _clique_cover_bound(candidates: Sequence[int], weights, adjacency) -> int:
    # Жадное покрытие кликами: независимое множество берёт не больше одной вершины из клики
    cliques = []
    bound = 0
    for v in sorted(candidates, key=lambda x: (-weights[x], x)):
        for clique in cliques:
            if clique <= adjacency[v]:
                clique.add(v)
                break
        else:
            cliques.append({v})
            bound += weights[v]
    return bound


def mwis_exact(graph: Graph, phi: PhiColoring, deadline: float | None = None) -> frozenset[int]:
    """Точное независимое множество максимального phi-веса, при равенстве лексикографически наименьшее.

    Ветвится по наименьшему нерешённому номеру, сначала беря вершину, и отсекает
    поддеревья, чья оценка покрытием кликами не превосходит рекорд строго.
    Первый найденный в этом порядке оптимум без хвостовых вершин нулевого веса
    и есть ответ.
    """
    weights = _phi_list(graph, phi)
    adjacency = [set(graph.adjacency[v]) for v in graph.vertices()]
    best_weight, best = -1, ()
    # явный стек вместо рекурсии: глубина ветвления доходит до n
    stack = [(tuple(graph.vertices()), 0, ())]
    while stack:
        if deadline is not None and time.monotonic() > deadline:
            raise MwisBudgetExceeded()
        candidates, weight, chosen = stack.pop()
        pool = set(candidates)
        # кандидаты без соседей в пуле берутся сразу: ветка без них не даст строго лучшего
        free = tuple(v for v in candidates if not adjacency[v] & pool)
        if free:
            candidates = tuple(v for v in candidates if adjacency[v] & pool)
            weight += sum(weights[v] for v in free)
            chosen += free
        if not candidates:
            if weight > best_weight:
                best_weight, best = weight, chosen
            continue
        if weight + _clique_cover_bound(candidates, weights, adjacency) <= best_weight:
            continue
        v, rest = candidates[0], candidates[1:]
        stack.append((rest, weight, chosen))
        stack.append((tuple(u for u in rest if u not in adjacency[v]), weight + weights[v], chosen + (v,)))

    witness = sorted(best)
    while witness and weights[witness[-1]] == 0:
        witness.pop()
    logger.debug(f"mwis_exact: n={graph.n}, weight={best_weight}, witness={witness}")
    return frozenset(witness)


def phi_maximum_set(graph: Graph, phi: PhiColoring, deadline: float | None = None) -> frozenset[int]:
    """Независимое множество максимального phi-веса, доминирующее в графе"""
    chosen = set(mwis_exact(graph, phi, deadline))
    for v in graph.vertices():
        if v not in chosen and not any(u in chosen for u in graph.adjacency[v]):
            chosen.add(v)
    return frozenset(chosen)


def set_weight(phi: PhiColoring, vertices) -> int:
    return sum(phi[v] for v in vertices)


def is_dominating(graph: Graph, vertices) -> bool:
    chosen = set(vertices)
    return all(v in chosen or any(u in chosen for u in graph.adjacency[v]) for v in graph.vertices())
