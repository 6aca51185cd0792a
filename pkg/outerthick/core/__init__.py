from .models import Edge, Family, Graph, canonical_edge
from .graph_ops import (
    DisjointnessResult,
    add_edge,
    complete_graph,
    complete_minus_matching,
    degree,
    degree_profile,
    degrees,
    edges_disjoint,
    graph_from_edges,
    max_degree,
    missing_pairs,
    new_graph,
    union,
)
