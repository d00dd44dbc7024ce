# families/complete_bipartite.py

import networkx as nx

from families import GraphFamily


class CompleteBipartite(GraphFamily):
    arity = 2

    def name(self) -> str:
        return "complete_bipartite"

    def numbering(self) -> str:
        return "left side 0..m-1, right side m..m+n-1"

    def build_nx(self, m: int, n: int) -> nx.Graph:
        return nx.complete_bipartite_graph(m, n)
