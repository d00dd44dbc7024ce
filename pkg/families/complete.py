# families/complete.py

import networkx as nx

from families import GraphFamily


class Complete(GraphFamily):
    def name(self) -> str:
        return "complete"

    def build_nx(self, n: int) -> nx.Graph:
        return nx.complete_graph(n)
