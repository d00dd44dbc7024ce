# service/export.py

from graph_mod import Element, Graph, format_rational, weighted_degree


def to_dot(graph: Graph, weights, heavy=(), name: str = "weighting") -> str:
    """DOT-текст неориентированного графа: метки вершин "id : sigma", тяжёлые элементы выделены.

    Рендер, например, `dot -Tpng -O weighting.gv`.
    """
    heavy = set(heavy)
    lines = [f"graph {name} {{", "\tnode [shape=circle];"]
    for v in graph.vertices():
        sigma = format_rational(weighted_degree(graph, weights, v))
        attrs = f'label="{v} : {sigma}"'
        if Element.vertex(v) in heavy:
            attrs += ", style=filled, fillcolor=lightgray"
        lines.append(f"\t{v} [{attrs}];")
    for u, v in graph.edges:
        edge = Element.edge(u, v)
        attrs = f'label="{format_rational(weights[edge])}"'
        if edge in heavy:
            attrs += ", style=bold, penwidth=2"
        lines.append(f"\t{u} -- {v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
