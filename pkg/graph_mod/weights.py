# graph_mod/weights.py

from collections.abc import Mapping
from fractions import Fraction

from .errors import UndefinedWeightError
from .graph import Element, Graph
from .rational import format_rational, parse_rational


class TotalWeighting(Mapping):
    """Неизменяемое отображение Element -> Fraction, обход в порядке элементов"""

    def __init__(self, values: Mapping[Element, object]):
        self._values = {element: parse_rational(value) for element, value in values.items()}

    def __getitem__(self, element: Element) -> Fraction:
        return self._values[element]

    def __iter__(self):
        return iter(sorted(self._values))

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        if isinstance(other, TotalWeighting):
            return self._values == other._values
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._values.items()))

    def __repr__(self):
        inner = ", ".join(f"{z.key()}: {format_rational(v)}" for z, v in self.items())
        return f"{type(self).__name__}({{{inner}}})"

    @classmethod
    def zero(cls, graph: Graph) -> "TotalWeighting":
        return cls.constant(graph, 0)

    @classmethod
    def constant(cls, graph: Graph, value) -> "TotalWeighting":
        value = parse_rational(value)
        return cls({z: value for z in graph.elements()})

    def check_total(self, graph: Graph) -> None:
        for z in graph.elements():
            if z not in self._values:
                raise UndefinedWeightError(z)
        extra = set(self._values) - set(graph.elements())
        if extra:
            raise ValueError(f"Weights given for elements outside the graph: {sorted(map(str, extra))}")

    def __add__(self, other: Mapping[Element, Fraction]) -> "TotalWeighting":
        if set(self._values) != set(other):
            raise ValueError("Cannot add weightings over different element sets")
        return TotalWeighting({z: v + other[z] for z, v in self._values.items()})

    def scaled(self, factor) -> "TotalWeighting":
        factor = parse_rational(factor)
        return TotalWeighting({z: v * factor for z, v in self._values.items()})

    def translated_vertices(self, shift) -> "TotalWeighting":
        shift = parse_rational(shift)
        return TotalWeighting({z: v + shift if z.is_vertex else v for z, v in self._values.items()})

    def to_json(self, span=None) -> dict:
        data = {}
        if span is not None:
            data["span"] = format_rational(span)
        data["vertices"] = {z.key(): format_rational(v) for z, v in self.items() if z.is_vertex}
        data["edges"] = {z.key(): format_rational(v) for z, v in self.items() if not z.is_vertex}
        return data

    @classmethod
    def from_json(cls, data: dict, graph: Graph | None = None) -> "TotalWeighting":
        if not isinstance(data, dict):
            raise ValueError("Weighting JSON must be an object")
        values = {}
        for section in ("vertices", "edges"):
            entries = data.get(section, {})
            if not isinstance(entries, dict):
                raise ValueError(f"'{section}' must be an object")
            for key, raw in entries.items():
                element = Element.from_key(key)
                if element.is_vertex != (section == "vertices"):
                    raise ValueError(f"Key {key!r} is in the wrong section '{section}'")
                values[element] = parse_rational(raw)
        weighting = cls(values)
        if graph is not None:
            weighting.check_total(graph)
        return weighting


def span_from_json(data: dict):
    raw = data.get("span") if isinstance(data, dict) else None
    return None if raw is None else parse_rational(raw)


class ListAssignment(Mapping):
    """Списки из двух значений Element -> (low, high), всегда low <= high"""

    def __init__(self, lists: Mapping[Element, tuple]):
        self._lists = {}
        for element, pair in lists.items():
            first, second = (parse_rational(x) for x in pair)
            self._lists[element] = (min(first, second), max(first, second))

    def __getitem__(self, element: Element) -> tuple[Fraction, Fraction]:
        return self._lists[element]

    def __iter__(self):
        return iter(sorted(self._lists))

    def __len__(self):
        return len(self._lists)

    @classmethod
    def uniform(cls, graph: Graph, first, second) -> "ListAssignment":
        return cls({z: (first, second) for z in graph.elements()})

    def to_json(self) -> dict:
        return {
            "vertices": {z.key(): [format_rational(x) for x in pair]
                         for z, pair in self.items() if z.is_vertex},
            "edges": {z.key(): [format_rational(x) for x in pair]
                      for z, pair in self.items() if not z.is_vertex},
        }

    @classmethod
    def from_json(cls, data: dict) -> "ListAssignment":
        if not isinstance(data, dict):
            raise ValueError("List assignment JSON must be an object")
        lists = {}
        for section in ("vertices", "edges"):
            entries = data.get(section, {})
            if not isinstance(entries, dict):
                raise ValueError(f"'{section}' must be an object")
            for key, pair in entries.items():
                if not isinstance(pair, list) or len(pair) != 2:
                    raise ValueError(f"List for {key!r} must have exactly two values")
                element = Element.from_key(key)
                if element.is_vertex != (section == "vertices"):
                    raise ValueError(f"Key {key!r} is in the wrong section '{section}'")
                lists[element] = tuple(pair)
        return cls(lists)
