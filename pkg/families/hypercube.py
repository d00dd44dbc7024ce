# families/hypercube.py

import networkx as nx

from families import GraphFamily


class Hypercube(GraphFamily):
    minimum = 1

    def name(self) -> str:
        return "hypercube"

    def numbering(self) -> str:
        return "vertex k is the 0/1 coordinate tuple of k in binary, first coordinate most significant"

    def build_nx(self, d: int) -> nx.Graph:
        return nx.hypercube_graph(d)
