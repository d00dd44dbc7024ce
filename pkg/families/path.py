# families/path.py

import networkx as nx

from families import GraphFamily


class Path(GraphFamily):
    def name(self) -> str:
        return "path"

    def numbering(self) -> str:
        return "vertices 0..n-1 along the path, edges i-(i+1)"

    def build_nx(self, n: int) -> nx.Graph:
        return nx.path_graph(n)
