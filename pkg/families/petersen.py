# families/petersen.py

import networkx as nx

from families import GraphFamily


class Petersen(GraphFamily):
    arity = 0

    def name(self) -> str:
        return "petersen"

    def numbering(self) -> str:
        return "outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)"

    def build_nx(self) -> nx.Graph:
        return nx.petersen_graph()
