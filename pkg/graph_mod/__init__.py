# graph_mod/__init__.py

from .errors import GraphFormatError, GraphTooLargeError, UndefinedWeightError, UnknownVertexError
from .graph import (
    EDGE,
    VERTEX,
    Edge,
    Element,
    Graph,
    Subgraph,
    bipartite_between,
    closed_star,
    edge_key,
    format_graph,
    induced,
    parse_graph,
    weighted_degree,
)
from .rational import format_rational, parse_rational
from .weights import ListAssignment, TotalWeighting, span_from_json
