# families/star.py

import networkx as nx

from families import GraphFamily


class Star(GraphFamily):
    def name(self) -> str:
        return "star"

    def numbering(self) -> str:
        return "center 0, leaves 1..k"

    def build_nx(self, leaves: int) -> nx.Graph:
        return nx.star_graph(leaves)
