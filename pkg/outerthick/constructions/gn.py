"""
Rotated "graph zero" construction: t edge-disjoint maximal outerplanar
graphs on 4t vertices with maximum degree t+3.

Graph zero on [4r]_0 has four apexes 0, r, 2r, 3r forming a square. Between
consecutive apexes a_q and a_{q+1} the outer cycle runs through the r-1
vertices (q+1)r+1, ..., (q+2)r-1, and a_q is joined to all of them. Graph i
is graph zero shifted by +i (mod 4r) plus its diagonal {i, i+2r}.
"""
import logging
from typing import List
from pydantic import BaseModel, Field, computed_field
from ..core.errors import ConstructionError, InvalidOrderError
from ..core.graph_ops import complete_minus_matching, union
from ..core.models import Edge, Family, Graph, canonical_edge
from ..utils.tracing import get_tracer
from .checks import require_mop_family

# Set up logging
logger = logging.getLogger(__name__)

# Set up tracing
tracer = get_tracer("gn_construction")


class GnParameters(BaseModel):
    r: int = Field(..., ge=1, description="Member count t; a quarter of the order")

    @computed_field
    @property
    def n(self) -> int:
        return 4 * self.r


def _params(r: int) -> GnParameters:
    if not isinstance(r, int) or r < 1:
        raise InvalidOrderError(f"r must be a positive integer, got {r!r}")
    return GnParameters(r=r)


def arc(r: int, q: int) -> List[int]:
    """
    Internal vertices between apexes a_q and a_{q+1}, in outer-cycle order from a_q.

    The vertices nearest a_{q+1} are (q+2)r-1, (q+1)r+1, (q+2)r-2, (q+1)r+2, ...
    alternating high and low; the one nearest a_q is floor((2q+3)r/2) mod 4r.
    """
    n = 4 * r
    low, high = (q + 1) * r + 1, (q + 2) * r - 1
    interleaved = []
    take_high = True
    while low <= high:
        if take_high:
            interleaved.append(high)
            high -= 1
        else:
            interleaved.append(low)
            low += 1
        take_high = not take_high
    return [v % n for v in reversed(interleaved)]


def outer_cycle_zero(r: int) -> List[int]:
    cycle: List[int] = []
    for q in range(4):
        cycle.append(q * r)
        cycle.extend(arc(r, q))
    return cycle


def graph_zero(r: int) -> Graph:
    """
    Build graph zero on [4r]_0 (8r-4 edges, maximum degree r+2 for r >= 2).

    Args:
        r: Positive integer; the order is 4r.

    Returns:
        Outer cycle, the square on the apexes and the apex fans.
    """
    params = _params(r)
    n = params.n
    edges = set()

    cycle = outer_cycle_zero(r)
    for p, v in enumerate(cycle):
        edges.add(canonical_edge(v, cycle[(p + 1) % n]))

    for q in range(4):
        apex = q * r
        edges.add(canonical_edge(apex, ((q + 1) % 4) * r))
        for v in arc(r, q):
            edges.add(canonical_edge(apex, v))

    if len(edges) != 2 * n - 4:
        raise ConstructionError(f"graph zero for r={r} has {len(edges)} edges, expected {2 * n - 4}")
    return Graph(n=n, edges=frozenset(edges))


def shift(g: Graph, i: int) -> Graph:
    """Add i (mod n) to every label."""
    return Graph(n=g.n, edges=frozenset(canonical_edge((u + i) % g.n, (v + i) % g.n) for u, v in g.edges))


def diagonal(r: int, i: int) -> Edge:
    return canonical_edge(i, i + 2 * r)


def gn_graph(r: int, i: int) -> Graph:
    """
    Graph i: graph zero shifted by +i plus the diagonal {i, i+2r}.

    Args:
        r: Member count; the order is 4r.
        i: Member index in [r]_0.

    Returns:
        A maximal outerplanar graph with 8r-3 edges.
    """
    _params(r)
    if not 0 <= i < r:
        raise InvalidOrderError(f"member index must lie in [0, {r}), got {i}")
    rotated = shift(graph_zero(r), i)
    return Graph(n=rotated.n, edges=rotated.edges | {diagonal(r, i)})


def missing_matching(t: int) -> List[Edge]:
    """The pairs {i, i+2t}, t <= i < 2t, left uncovered by the family."""
    return [(i, i + 2 * t) for i in range(t, 2 * t)]


def gn_family(t: int) -> Family:
    """
    Build t edge-disjoint maximal outerplanar graphs on 4t vertices.

    The family verifies itself: every member is certified, members are
    pairwise disjoint and their union is K_{4t} minus missing_matching(t).
    Any failure raises ConstructionError.
    """
    _params(t)
    with tracer.start_as_current_span("gn_family") as span:
        span.set_attribute("t", t)

        f = Family.from_graphs([gn_graph(t, i) for i in range(t)])
        require_mop_family(f, f"gn_family(t={t})")

        expected = complete_minus_matching(4 * t, missing_matching(t))
        if union(f) != expected:
            raise ConstructionError(f"gn_family(t={t}): union is not K_{4 * t} minus the expected matching")

        logger.info(f"Built GN family with t={t} members on n={f.n} vertices")
        span.set_attribute("n", f.n)
        return f
