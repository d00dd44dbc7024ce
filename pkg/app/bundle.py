# app/bundle.py

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from graph_mod import Graph, ListAssignment, TotalWeighting, format_graph, parse_graph, parse_rational, span_from_json

from .constants import BASE_ZERO, LISTS_FILE, LISTS_UNIFORM

logger = logging.getLogger(__name__)


def read_text(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValueError(f"Cannot read {path}: {e.strerror}") from None


def load_json(path):
    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def load_graph(path) -> Graph:
    try:
        return parse_graph(read_text(path))
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from None


@dataclass(frozen=True)
class InstanceBundle:
    """Граф вместе с базовой разметкой и шагом либо со списками"""
    graph: Graph
    base: TotalWeighting | None = None
    span: Fraction | None = None
    lists: ListAssignment | None = None

    def __post_init__(self):
        has_base = self.base is not None and self.span is not None
        if has_base == (self.lists is not None):
            raise ValueError("Give either a base weighting with a span or a list assignment, not both")
        if self.base is not None:
            self.base.check_total(self.graph)

    @classmethod
    def from_args(cls, graph_path, base=None, span=None, lists=None) -> "InstanceBundle":
        graph = load_graph(graph_path)
        if lists is not None:
            if base is not None or span is not None:
                raise ValueError("--lists cannot be combined with --base or --span")
            return cls(graph, lists=parse_lists(graph, lists))
        if base is None:
            raise ValueError("One of --base or --lists is required")
        if base == BASE_ZERO:
            weighting, file_span = TotalWeighting.zero(graph), None
        else:
            data = load_json(base)
            weighting, file_span = TotalWeighting.from_json(data, graph), span_from_json(data)
        if span is not None:
            span = parse_rational(span)
        elif file_span is not None:
            span = file_span
        else:
            raise ValueError("--span is required unless the base weighting file carries a span")
        logger.debug(f"bundle: n={graph.n}, m={graph.m}, span={span}")
        return cls(graph, base=weighting, span=span)

    def write(self, directory, stem: str = "instance") -> tuple[Path, Path]:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        graph_path = directory / f"{stem}.txt"
        graph_path.write_text(format_graph(self.graph), encoding="utf-8")
        data_path = directory / f"{stem}.json"
        data = self.lists.to_json() if self.lists is not None else self.base.to_json(self.span)
        data_path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
        return graph_path, data_path


def parse_lists(graph: Graph, spec: str) -> ListAssignment:
    if spec.startswith(LISTS_UNIFORM):
        values = spec[len(LISTS_UNIFORM):].split(",")
        if len(values) != 2:
            raise ValueError(f"Expected uniform:a,b, got {spec!r}")
        return ListAssignment.uniform(graph, *(parse_rational(x) for x in values))
    if spec.startswith(LISTS_FILE):
        return ListAssignment.from_json(load_json(spec[len(LISTS_FILE):]))
    raise ValueError(f"Unknown list specification {spec!r}; use uniform:a,b or file:PATH")
