import logging
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union
from pydantic import BaseModel, Field
from ..core.models import Edge, Graph, canonical_edge
from ..utils.tracing import get_tracer, record_graph

# Set up logging
logger = logging.getLogger(__name__)

# Set up tracing
tracer = get_tracer("mop_cert")


class EdgeClassification(BaseModel):
    """Edges of a graph split by the number of common neighbors of their endpoints."""
    outer: Tuple[Edge, ...] = Field(default=(), description="Edges whose endpoints share exactly 1 neighbor")
    chords: Tuple[Edge, ...] = Field(default=(), description="Edges whose endpoints share exactly 2 neighbors")
    unclassified: Tuple[Edge, ...] = Field(default=(), description="Edges with any other count")

    @property
    def failed(self) -> bool:
        return len(self.unclassified) > 0


class MopCertificate(BaseModel):
    """
    Proof that a graph is maximal outerplanar: its outer cycle plus its chords.

    The certificate can be re-checked against the graph with
    verify_certificate without trusting whoever produced it.
    """
    n: int = Field(..., ge=3)
    cycle: Tuple[int, ...] = Field(..., description="Outer cycle as a cyclic vertex sequence")
    chords: Tuple[Edge, ...] = Field(..., description="The n-3 non-cycle edges")
    positions: Tuple[int, ...] = Field(..., description="positions[v] is the index of v in the cycle")

    def cycle_edges(self) -> List[Edge]:
        return cycle_edges(self.cycle)


class RejectionReason(str, Enum):
    TOO_FEW_VERTICES = "too_few_vertices"
    WRONG_EDGE_COUNT = "wrong_edge_count"
    CLASSIFICATION_FAILURE = "classification_failure"
    NOT_HAMILTONIAN = "not_hamiltonian_cycle"
    CROSSING_CHORDS = "crossing_chords"


class MopRejection(BaseModel):
    reason: RejectionReason
    detail: str = ""


def cycle_edges(cycle: Sequence[int]) -> List[Edge]:
    """Consecutive pairs of a cyclic sequence, closing back to the start."""
    return [canonical_edge(cycle[p], cycle[(p + 1) % len(cycle)]) for p in range(len(cycle))]


def find_crossing(chords: Sequence[Edge], positions: Sequence[int]) -> Optional[Tuple[Edge, Edge]]:
    """
    Find two chords that cross with respect to a cyclic order.

    Chords sharing an endpoint never cross. Intervals are swept left to right
    with a stack of open right ends; a chord crosses the innermost open one
    exactly when it ends beyond it.

    Args:
        chords: The chords to test.
        positions: positions[v] is v's index on the cycle.

    Returns:
        A crossing pair, or None if the chords are pairwise non-crossing.
    """
    intervals = []
    for a, b in chords:
        p, q = sorted((positions[a], positions[b]))
        intervals.append((p, -q, (a, b)))
    intervals.sort()

    stack: List[Tuple[int, Edge]] = []
    for p, neg_q, chord in intervals:
        q = -neg_q
        while stack and stack[-1][0] <= p:
            stack.pop()
        if stack and q > stack[-1][0]:
            return stack[-1][1], chord
        stack.append((q, chord))
    return None


def classify_edges(g: Graph) -> EdgeClassification:
    """
    Split edges by their endpoints' common-neighbor count.

    In a maximal outerplanar graph an outer edge lies on exactly one triangle
    and a chord on exactly two. On other graphs this is only a candidate split.

    Args:
        g: A graph with at least three vertices.

    Returns:
        The classification; `failed` is set if any edge fits neither class.
    """
    adj = g.adjacency()
    outer, chords, unclassified = [], [], []
    for u, v in g.sorted_edges():
        common = len(adj[u] & adj[v])
        if common == 1:
            outer.append((u, v))
        elif common == 2:
            chords.append((u, v))
        else:
            unclassified.append((u, v))
    return EdgeClassification(outer=tuple(outer), chords=tuple(chords), unclassified=tuple(unclassified))


def _trace_cycle(n: int, outer: Sequence[Edge]) -> Optional[List[int]]:
    """Walk the outer candidates from vertex 0; None unless they form one Hamiltonian cycle."""
    if len(outer) != n:
        return None
    ring: List[List[int]] = [[] for _ in range(n)]
    for u, v in outer:
        ring[u].append(v)
        ring[v].append(u)
    if any(len(nbrs) != 2 for nbrs in ring):
        return None

    cycle = [0]
    prev, current = 0, min(ring[0])
    while current != 0:
        cycle.append(current)
        a, b = ring[current]
        prev, current = current, (b if a == prev else a)
    return cycle if len(cycle) == n else None


def certify_mop(g: Graph) -> Union[MopCertificate, MopRejection]:
    """
    Decide whether g is maximal outerplanar and, if so, produce a certificate.

    Args:
        g: The graph to certify.

    Returns:
        A MopCertificate, or a MopRejection naming the first failed check.
    """
    with tracer.start_as_current_span("certify_mop") as span:
        record_graph(span, g)

        if g.n < 3:
            return MopRejection(reason=RejectionReason.TOO_FEW_VERTICES, detail=f"n={g.n} < 3")

        expected = 2 * g.n - 3
        if g.m != expected:
            return MopRejection(
                reason=RejectionReason.WRONG_EDGE_COUNT,
                detail=f"edge count {g.m} != {expected}",
            )

        classification = classify_edges(g)
        if classification.failed:
            return MopRejection(
                reason=RejectionReason.CLASSIFICATION_FAILURE,
                detail=f"{len(classification.unclassified)} edges with neither 1 nor 2 common neighbors, "
                       f"first {classification.unclassified[0]}",
            )

        cycle = _trace_cycle(g.n, classification.outer)
        if cycle is None:
            return MopRejection(
                reason=RejectionReason.NOT_HAMILTONIAN,
                detail=f"{len(classification.outer)} outer candidates do not form a Hamiltonian cycle",
            )

        positions = [0] * g.n
        for p, v in enumerate(cycle):
            positions[v] = p

        crossing = find_crossing(classification.chords, positions)
        if crossing is not None:
            return MopRejection(
                reason=RejectionReason.CROSSING_CHORDS,
                detail=f"chords {crossing[0]} and {crossing[1]} cross",
            )

        span.set_attribute("certified", True)
        return MopCertificate(
            n=g.n,
            cycle=tuple(cycle),
            chords=classification.chords,
            positions=tuple(positions),
        )


def verify_certificate(g: Graph, c: MopCertificate) -> bool:
    """
    Re-check a certificate against a graph from scratch.

    Returns:
        True iff the cycle is Hamiltonian, the cycle edges and chords are
        exactly the edges of g, there are n-3 chords and none cross.
    """
    n = g.n
    if c.n != n or n < 3:
        return False
    if len(c.cycle) != n or sorted(c.cycle) != list(range(n)):
        return False
    if len(c.positions) != n or any(c.positions[v] != p for p, v in enumerate(c.cycle)):
        return False

    ring = set(cycle_edges(c.cycle))
    chords = set(c.chords)
    if len(chords) != len(c.chords) or len(chords) != n - 3:
        return False
    if any(u >= v for u, v in chords) or chords & ring:
        return False
    if (ring | chords) != set(g.edges):
        return False
    return find_crossing(c.chords, c.positions) is None
