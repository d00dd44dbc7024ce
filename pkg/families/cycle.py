# families/cycle.py

import networkx as nx

from families import GraphFamily


class Cycle(GraphFamily):
    minimum = 3

    def name(self) -> str:
        return "cycle"

    def numbering(self) -> str:
        return "vertices 0..n-1 around the cycle, edges i-(i+1 mod n)"

    def build_nx(self, n: int) -> nx.Graph:
        return nx.cycle_graph(n)
