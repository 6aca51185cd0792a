import logging
from collections import Counter, defaultdict
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple
from pydantic import BaseModel, Field
from .errors import InvalidOrderError, LabelOutOfRangeError, OverlappingMatchingError, SelfLoopError
from .models import Edge, Family, Graph, canonical_edge

# Set up logging
logger = logging.getLogger(__name__)


class DisjointnessResult(BaseModel):
    """Outcome of a pairwise edge-disjointness check."""
    disjoint: bool = Field(..., description="True iff no edge occurs in two members")
    witness: Optional[Tuple[int, int, Edge]] = Field(
        default=None,
        description="First collision (i, j, edge) in lexicographic order, when not disjoint",
    )


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidOrderError(f"graph order must be a positive integer, got {n!r}")


def _check_pair(n: int, u: int, v: int) -> Edge:
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    for label in (u, v):
        if not 0 <= label < n:
            raise LabelOutOfRangeError(f"label {label} outside [{n}]_0")
    return canonical_edge(u, v)


def new_graph(n: int) -> Graph:
    """Create the edgeless graph on [n]_0."""
    _check_order(n)
    return Graph(n=n)


def graph_from_edges(n: int, pairs: Iterable[Tuple[int, int]]) -> Graph:
    """
    Build a graph from arbitrary (possibly unsorted, repeated) pairs.

    Args:
        n: The order of the graph.
        pairs: Vertex pairs; each is validated and canonicalized.

    Returns:
        The graph on [n]_0 with those edges.
    """
    _check_order(n)
    return Graph(n=n, edges=frozenset(_check_pair(n, u, v) for u, v in pairs))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return g with the edge {u, v} added. Adding an existing edge is a no-op."""
    edge = _check_pair(g.n, u, v)
    if edge in g.edges:
        return g
    return Graph(n=g.n, edges=g.edges | {edge})


def complete_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n=n, edges=frozenset(combinations(range(n), 2)))


def complete_minus_matching(n: int, missing: Iterable[Tuple[int, int]]) -> Graph:
    """
    Build K_n with the pairs of a matching removed.

    Args:
        n: The order of the complete graph.
        missing: Pairwise vertex-disjoint pairs to leave out.

    Returns:
        K_n minus exactly the given pairs.
    """
    _check_order(n)
    removed = set()
    covered = set()
    for u, v in missing:
        edge = _check_pair(n, u, v)
        if edge in removed:
            continue
        if u in covered or v in covered:
            raise OverlappingMatchingError(f"pair {edge} shares an endpoint with another missing pair")
        covered.update(edge)
        removed.add(edge)
    edges = frozenset(e for e in combinations(range(n), 2) if e not in removed)
    return Graph(n=n, edges=edges)


def edges_disjoint(f: Family) -> DisjointnessResult:
    """
    Check that no edge occurs in two members of a family.

    Args:
        f: The family to check.

    Returns:
        The verdict and, on failure, the lexicographically first collision.
    """
    owners: Dict[Edge, List[int]] = defaultdict(list)
    for k, member in enumerate(f.members):
        for edge in member:
            owners[edge].append(k)

    collisions = [(ks[0], ks[1], edge) for edge, ks in owners.items() if len(ks) > 1]
    if not collisions:
        return DisjointnessResult(disjoint=True)

    witness = min(collisions)
    logger.debug(f"Edge {witness[2]} occurs in members {witness[0]} and {witness[1]}")
    return DisjointnessResult(disjoint=False, witness=witness)


def union(f: Family) -> Graph:
    """Return the graph on [n]_0 whose edge set is the union of all members."""
    edges = frozenset().union(*f.members)
    return Graph(n=f.n, edges=edges)


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise LabelOutOfRangeError(f"label {v} outside [{g.n}]_0")
    return sum(1 for e in g.edges if v in e)


def degrees(g: Graph) -> List[int]:
    counts = [0] * g.n
    for u, v in g.edges:
        counts[u] += 1
        counts[v] += 1
    return counts


def max_degree(g: Graph) -> int:
    return max(degrees(g))


def degree_profile(g: Graph) -> Dict[int, int]:
    """Map each occurring degree to the number of vertices having it."""
    return dict(sorted(Counter(degrees(g)).items()))


def missing_pairs(g: Graph) -> List[Edge]:
    """List the non-edges of g in lexicographic order."""
    return [e for e in combinations(range(g.n), 2) if e not in g.edges]
