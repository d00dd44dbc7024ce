# graph_mod/graph.py

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Mapping

from .errors import GraphFormatError, UndefinedWeightError, UnknownVertexError

Edge = tuple[int, int]

VERTEX = "vertex"
EDGE = "edge"


def edge_key(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"Self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@total_ordering
@dataclass(frozen=True)
class Element:
    """Вершина или ребро графа"""
    kind: str
    id: int | Edge

    @classmethod
    def vertex(cls, v: int) -> "Element":
        return cls(VERTEX, v)

    @classmethod
    def edge(cls, u: int, v: int) -> "Element":
        return cls(EDGE, edge_key(u, v))

    @property
    def is_vertex(self) -> bool:
        return self.kind == VERTEX

    def key(self) -> str:
        if self.is_vertex:
            return str(self.id)
        return f"{self.id[0]}-{self.id[1]}"

    @classmethod
    def from_key(cls, key: str) -> "Element":
        if not isinstance(key, str):
            raise ValueError(f"Invalid element key: {key!r}")
        try:
            if "-" in key:
                u, v = key.split("-")
                u, v = int(u), int(v)
                if u >= v:
                    raise ValueError
                element = cls(EDGE, (u, v))
            else:
                element = cls(VERTEX, int(key))
        except ValueError:
            raise ValueError(f"Invalid element key: {key!r}") from None
        # "01" и "+1" дали бы тот же элемент, что и "1"
        if element.key() != key:
            raise ValueError(f"Element key {key!r} is not canonical, expected {element.key()!r}")
        return element

    def sort_key(self):
        if self.is_vertex:
            return (0, self.id, self.id)
        return (1, *self.id)

    def __lt__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return self.key()


@dataclass(frozen=True)
class Graph:
    """Простой неориентированный граф на вершинах 0..n-1, неизменяемый"""
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {n}")
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UnknownVertexError((u, v))
            pair = edge_key(u, v)
            if pair in normalized:
                raise ValueError(f"Duplicate edge {pair[0]}-{pair[1]}")
            normalized.add(pair)
        neighbors = [[] for _ in range(n)]
        for u, v in normalized:
            neighbors[u].append(v)
            neighbors[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(row)) for row in neighbors))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise UnknownVertexError(v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and 0 <= u < self.n and v in self.adjacency[u]

    def elements(self) -> list[Element]:
        """Сначала вершины по возрастанию, затем рёбра в лексикографическом порядке"""
        return [Element.vertex(v) for v in range(self.n)] + [Element(EDGE, e) for e in self.edges]

    def is_independent(self, vertices: Iterable[int]) -> bool:
        chosen = set(vertices)
        return not any(u in chosen and v in chosen for u, v in self.edges)


@dataclass(frozen=True)
class Subgraph:
    """Подграф на локальных номерах 0..k-1 и их исходные номера"""
    graph: Graph
    ids: tuple[int, ...]

    def lift(self, local_vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.ids[x] for x in local_vertices)


def parse_graph(text: str) -> Graph:
    """Читает список рёбер: строка "n m", затем m строк "u v"; '#' начинает комментарий"""
    header = None
    edges = []
    seen = set()
    line_no = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(line_no, f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(line_no, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(line_no, "vertex and edge counts must be non-negative")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(line_no, f"more than the declared {m} edges")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(line_no, f"vertex id out of range 0..{n - 1}: {line!r}")
        if a == b:
            raise GraphFormatError(line_no, f"self-loop at vertex {a}")
        pair = edge_key(a, b)
        if pair in seen:
            raise GraphFormatError(line_no, f"duplicate edge {pair[0]}-{pair[1]}")
        seen.add(pair)
        edges.append(pair)
    if header is None:
        raise GraphFormatError(max(line_no, 1), "missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(line_no, f"declared {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def format_graph(graph: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{graph.n} {graph.m}")
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def weighted_degree(graph: Graph, weights: Mapping[Element, object], v: int):
    """Взвешенная степень: w(v) плюс веса инцидентных рёбер, точно"""
    graph.check_vertex(v)
    total = _lookup(weights, Element.vertex(v))
    for u in graph.adjacency[v]:
        total = total + _lookup(weights, Element.edge(u, v))
    return total


def _lookup(weights, element):
    try:
        return weights[element]
    except KeyError:
        raise UndefinedWeightError(element) from None


def induced(graph: Graph, vertices: Iterable[int]) -> Subgraph:
    ids = tuple(sorted(set(vertices)))
    for v in ids:
        graph.check_vertex(v)
    local = {v: i for i, v in enumerate(ids)}
    edges = [(local[u], local[v]) for u, v in graph.edges if u in local and v in local]
    return Subgraph(Graph(len(ids), edges), ids)


def bipartite_between(graph: Graph, left: Iterable[int], right: Iterable[int]) -> Subgraph:
    left, right = set(left), set(right)
    overlap = left & right
    if overlap:
        raise ValueError(f"Sides overlap at {sorted(overlap)}")
    ids = tuple(sorted(left | right))
    for v in ids:
        graph.check_vertex(v)
    local = {v: i for i, v in enumerate(ids)}
    edges = [
        (local[u], local[v])
        for u, v in graph.edges
        if (u in left and v in right) or (u in right and v in left)
    ]
    return Subgraph(Graph(len(ids), edges), ids)


def closed_star(graph: Graph, v: int) -> frozenset[Element]:
    graph.check_vertex(v)
    return frozenset([Element.vertex(v)] + [Element.edge(v, u) for u in graph.adjacency[v]])
