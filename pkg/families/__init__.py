# families/__init__.py

from abc import ABC, abstractmethod
from importlib import import_module

import networkx as nx

from graph_mod import Graph

FAMILY_NAMES = ("path", "cycle", "complete", "complete_bipartite", "star", "petersen", "hypercube")


class GraphFamily(ABC):
    # число целых параметров семейства
    arity = 1
    minimum = 0

    @abstractmethod
    def name(self) -> str:
        """Возвращает название семейства графов"""
        pass

    @abstractmethod
    def build_nx(self, *params: int) -> nx.Graph:
        """Строит граф семейства средствами networkx"""
        pass

    def numbering(self) -> str:
        """Описывает нумерацию вершин"""
        return "networkx node order"

    def build(self, *params) -> Graph:
        values = self.check_params(params)
        return from_networkx(self.build_nx(*values))

    def check_params(self, params) -> tuple[int, ...]:
        if len(params) != self.arity:
            raise ValueError(f"{self.name()} takes {self.arity} parameter(s), got {len(params)}")
        try:
            values = tuple(int(p) for p in params)
        except (TypeError, ValueError):
            raise ValueError(f"{self.name()} parameters must be integers, got {list(params)}") from None
        for value in values:
            if value < self.minimum:
                raise ValueError(f"{self.name()} parameters must be at least {self.minimum}, got {value}")
        return values


def from_networkx(g: nx.Graph) -> Graph:
    """Перенумеровывает вершины в 0..n-1 в порядке сортировки"""
    index = {node: i for i, node in enumerate(sorted(g.nodes()))}
    return Graph(len(index), [(index[u], index[v]) for u, v in g.edges()])


def get_graph_family(family_name):
    try:
        module = import_module(f"families.{family_name.lower()}")
        class_name = ''.join(word.capitalize() for word in family_name.split('_'))
        return getattr(module, class_name)
    except (ImportError, AttributeError):
        raise ValueError(f"Unknown graph family: {family_name}")
