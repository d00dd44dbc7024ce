# service/wellgraph.py

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from config import Config
from graph_mod import Graph, bipartite_between, edge_key, induced

from .errors import NoAugmentingPath
from .report import Report

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WellInstance:
    """Двудольный граф между `iside` и упорядоченными U-вершинами с ёмкостями phi.

    `links` хранит пары (I-вершина, U-вершина) графа H, `uedges` рёбра исходного графа внутри U.
    """
    iside: tuple[int, ...]
    uorder: tuple[int, ...]
    phi: Mapping[int, int]
    links: frozenset[tuple[int, int]]
    uedges: frozenset[tuple[int, int]]

    def __post_init__(self):
        overlap = set(self.iside) & set(self.uorder)
        if overlap:
            raise ValueError(f"I-side and U overlap at {sorted(overlap)}")
        if len(set(self.uorder)) != len(self.uorder):
            raise ValueError("U order lists a vertex twice")
        missing = [v for v in (*self.iside, *self.uorder) if v not in self.phi]
        if missing:
            raise ValueError(f"phi is undefined on {missing}")
        iside, uside = set(self.iside), set(self.uorder)
        for x, u in self.links:
            if x not in iside or u not in uside:
                raise ValueError(f"Link {x}-{u} does not join the I-side to U")
        for u, v in self.uedges:
            if u not in uside or v not in uside:
                raise ValueError(f"U-edge {u}-{v} leaves U")
        object.__setattr__(self, "phi", MappingProxyType(dict(self.phi)))

    @classmethod
    def from_graph(cls, graph: Graph, iside, uorder, phi) -> "WellInstance":
        iside, uorder = tuple(sorted(iside)), tuple(uorder)
        between = bipartite_between(graph, iside, uorder)
        iset = set(iside)
        links = set()
        for a, b in between.graph.edges:
            u, v = between.ids[a], between.ids[b]
            links.add((u, v) if u in iset else (v, u))
        inside = induced(graph, uorder)
        uedges = {edge_key(inside.ids[a], inside.ids[b]) for a, b in inside.graph.edges}
        return cls(iside, uorder, phi, frozenset(links), frozenset(uedges))

    def u_neighbors(self, u: int) -> list[int]:
        return sorted(x for x, y in self.links if y == u)

    def later_neighbors(self, position: int) -> set[int]:
        u = self.uorder[position]
        later = set(self.uorder[position + 1:])
        return {b if a == u else a for a, b in self.uedges if u in (a, b)} & later

    def to_json(self) -> dict:
        return {
            "iside": list(self.iside),
            "uorder": list(self.uorder),
            "phi": {str(v): self.phi[v] for v in sorted(self.phi)},
            "links": sorted([x, u] for x, u in self.links),
            "uedges": sorted([u, v] for u, v in self.uedges),
        }

    @classmethod
    def from_json(cls, data: dict) -> "WellInstance":
        try:
            return cls(
                iside=tuple(sorted(int(x) for x in data["iside"])),
                uorder=tuple(int(u) for u in data["uorder"]),
                phi={int(k): int(v) for k, v in data["phi"].items()},
                links=frozenset((int(x), int(u)) for x, u in data.get("links", [])),
                uedges=frozenset(edge_key(int(u), int(v)) for u, v in data.get("uedges", [])),
            )
        except (KeyError, TypeError, AttributeError) as e:
            raise ValueError(f"Malformed well instance: {e}") from None


@dataclass(frozen=True)
class StarForest:
    """Пары (I-вершина, U-вершина); каждая U-вершина лист ровно одной звезды"""
    edges: frozenset[tuple[int, int]]

    def degree(self, x: int) -> int:
        return sum(1 for center, _ in self.edges if center == x)

    def to_json(self) -> list[list[int]]:
        return sorted([x, u] for x, u in self.edges)


def check_preconditions(inst: WellInstance) -> Report:
    report = Report()
    for x in inst.iside:
        report.add(f"phi-positive:{x}", inst.phi[x] >= 1, {"vertex": x, "phi": inst.phi[x]})
    for k, u in enumerate(inst.uorder):
        report.add(f"phi-positive:{u}", inst.phi[u] >= 1, {"vertex": u, "phi": inst.phi[u]})
        later = inst.later_neighbors(k)
        report.add(f"later-neighbors:{u}", len(later) <= inst.phi[u] - 1,
                   {"vertex": u, "later": sorted(later), "phi": inst.phi[u]})
    return report


def find_well_subgraph(inst: WellInstance) -> StarForest:
    """Добавляет U-вершины по порядку, переворачивая чередующийся путь, когда все соседи заняты"""
    neighbors = {u: inst.u_neighbors(u) for u in inst.uorder}
    assigned = {}
    load = {x: 0 for x in inst.iside}
    for start in inst.uorder:
        parent_x = {}
        reached_u = {start}
        queue = deque([start])
        found = None
        while queue and found is None:
            y = queue.popleft()
            for x in neighbors[y]:
                if x == assigned.get(y) or x in parent_x:
                    continue
                parent_x[x] = y
                if load[x] < inst.phi[x]:
                    found = x
                    break
                for z in sorted(u for u, center in assigned.items() if center == x):
                    if z not in reached_u:
                        reached_u.add(z)
                        queue.append(z)
        if found is None:
            certificate = improving_set(inst, reached_u, set(parent_x))
            raise NoAugmentingPath(start, reached_u, set(parent_x), certificate)

        x = found
        while True:
            y = parent_x[x]
            previous = assigned.get(y)
            assigned[y] = x
            if y == start:
                break
            x = previous
        load[found] += 1
        logger.debug(f"well: placed U-vertex {start}, slot freed at {found}")
    return StarForest(frozenset((x, u) for u, x in assigned.items()))


def improving_set(inst: WellInstance, reachable_u, reachable_i) -> frozenset[int] | None:
    """Множество обмена (I - I_H) + Y0 после неудачного поиска; только если оно строго тяжелее"""
    reachable_u = set(reachable_u)
    region = [u for u in inst.uorder if u in reachable_u]
    position = {u: k for k, u in enumerate(inst.uorder)}
    covered = set()
    picked = []
    for y in region:
        if y in covered:
            continue
        picked.append(y)
        covered.add(y)
        covered |= inst.later_neighbors(position[y]) & set(region)
    candidate = (set(inst.iside) - set(reachable_i)) | set(picked)
    current = sum(inst.phi[x] for x in inst.iside)
    if sum(inst.phi[v] for v in candidate) > current:
        return frozenset(candidate)
    return None


def verify_well(inst: WellInstance, forest: StarForest) -> bool:
    for link in forest.edges:
        if link not in inst.links:
            raise ValueError(f"Edge {link[0]}-{link[1]} is not in the instance graph")
    u_degree = {u: 0 for u in inst.uorder}
    for _, u in forest.edges:
        u_degree[u] += 1
    if any(d != 1 for d in u_degree.values()):
        return False
    return all(forest.degree(x) <= inst.phi[x] for x in inst.iside)


def hall_condition_holds(inst: WellInstance, max_u: int = Config.WELL_BRUTEFORCE_MAX_U) -> bool:
    """Условие Холла: каждое подмножество U видит не меньше ёмкости, чем в нём вершин"""
    if len(inst.uorder) > max_u:
        raise ValueError(f"Too many U-vertices for the subset check: {len(inst.uorder)} > {max_u}")
    neighbors = {u: set(inst.u_neighbors(u)) for u in inst.uorder}
    for size in range(1, len(inst.uorder) + 1):
        for subset in itertools.combinations(inst.uorder, size):
            reach = set().union(*(neighbors[u] for u in subset))
            if sum(inst.phi[x] for x in reach) < size:
                return False
    return True


def enumerate_well_subgraphs(inst: WellInstance, max_u: int = Config.WELL_BRUTEFORCE_MAX_U):
    """Перебирает все звёздные леса, покрывающие U один раз в пределах ёмкостей"""
    if len(inst.uorder) > max_u:
        raise ValueError(f"Too many U-vertices for enumeration: {len(inst.uorder)} > {max_u}")
    choices = [inst.u_neighbors(u) for u in inst.uorder]
    for pick in itertools.product(*choices):
        counts = {}
        for x in pick:
            counts[x] = counts.get(x, 0) + 1
        if all(counts[x] <= inst.phi[x] for x in counts):
            yield StarForest(frozenset(zip(pick, inst.uorder)))
