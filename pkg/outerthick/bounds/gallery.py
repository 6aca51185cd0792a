"""
Small named graphs and witnesses: optimal outerthickness-t graphs, the
K7 minus an edge decomposition, the edge-count separation from 1-planar
graphs and the eight-vertex maximality check.
"""
import logging
from itertools import combinations
from typing import List, Optional, Tuple
from pydantic import BaseModel, Field
from ..certify.mop import MopRejection, certify_mop
from ..certify.outerplanar import is_outerplanar_small
from ..certify.search import SearchResult, SearchVerdict, outerthickness_exact
from ..config import Budgets, get_budgets
from ..core.errors import BudgetExceededError, ConstructionError, InvalidOrderError
from ..core.graph_ops import complete_graph, complete_minus_matching, union
from ..core.models import Edge, Family, Graph
from ..constructions.checks import require_mop_family
from ..constructions.doubling import doubling_family
from ..constructions.extension import extend_to
from ..constructions.gn import gn_family, missing_matching
from ..utils.tracing import get_tracer
from .lower_bound import BoundVerdict, counting_check

# Set up logging
logger = logging.getLogger(__name__)

# Set up tracing
tracer = get_tracer("bounds_gallery")

# Decomposition of K7 minus {0, 4}; member 0 is maximal outerplanar, member 1 is not.
K7E_MEMBER_0: Tuple[Edge, ...] = (
    (0, 1), (0, 2), (0, 6), (1, 2), (2, 6), (2, 5), (2, 4), (2, 3), (3, 4), (4, 5), (5, 6),
)
K7E_MEMBER_1: Tuple[Edge, ...] = (
    (0, 3), (3, 6), (1, 3), (3, 5), (4, 6), (1, 6), (1, 4), (1, 5), (0, 5),
)
K7E_MISSING: Edge = (0, 4)


class OptimalWitness(BaseModel):
    """An optimal outerthickness-t graph together with the family decomposing it."""
    graph: Graph
    family: Family
    construction: str = Field(..., description="gn, doubling or triangle")


class MaximalityWitness(BaseModel):
    """Search outcomes showing that K7 minus an edge is maximal but not optimal."""
    k7e_two: SearchResult
    k7_two: SearchResult
    k7_three: Optional[SearchResult] = None
    edge_count: int = Field(..., description="Edges of K7 minus an edge")
    optimal_edge_count: int = Field(..., description="2(2n-3) for n = 7")
    confirmed: bool


class SeparationWitness(BaseModel):
    n: int
    edge_count: int
    one_planar_bound: int = Field(..., description="4n-8, the most edges a 1-planar graph can have")
    graph: Graph
    separated: bool


class EightVertexCase(BaseModel):
    """K8 minus an edge set F in which no two edges are independent."""
    label: str
    removed: Tuple[Edge, ...]
    k7_vertex: Optional[int] = Field(default=None, description="A vertex whose removal leaves K7, if any")

    @property
    def contains_k7(self) -> bool:
        return self.k7_vertex is not None


class EightVertexVerdict(BaseModel):
    cases: List[EightVertexCase]
    k7_refuted: bool
    matching_optimal: bool
    holds: bool


def triangle_family() -> Family:
    return Family(t=1, n=3, members=(frozenset({(0, 1), (1, 2), (0, 2)}),))


def _doubling_witness_family(t: int, n: int) -> Family:
    s = max(t - 1, 0).bit_length()
    base = doubling_family(s)
    if n < base.n:
        raise InvalidOrderError(f"the doubling construction for t={t} needs n >= {base.n}, got n={n}")
    return base.select(list(range(t)))


def optimal_ot_graph(t: int, n: int, construction: str = "gn") -> OptimalWitness:
    """
    Build an optimal outerthickness-t graph on n vertices.

    Args:
        t: Number of members.
        n: Order; at least 4t (or 3 when t = 1).
        construction: "gn" (default) starts from gn_family(t); "doubling"
            starts from the smallest doubling family with at least t
            members and keeps the first t.

    Returns:
        The union graph with t(2n-3) edges and its verified family.
    """
    if n < 3:
        raise InvalidOrderError(f"n must be at least 3, got n={n}")
    report = counting_check(t, n)
    if report.verdict == BoundVerdict.INFEASIBLE:
        raise InvalidOrderError(
            f"no optimal outerthickness-{t} graph on n={n} vertices (needs n >= {report.min_vertices})"
        )

    with tracer.start_as_current_span("optimal_ot_graph") as span:
        span.set_attribute("t", t)
        span.set_attribute("n", n)
        span.set_attribute("construction", construction)

        if t == 1 and n == 3:
            start, construction = triangle_family(), "triangle"
        elif construction == "gn":
            start = gn_family(t)
        elif construction == "doubling":
            start = _doubling_witness_family(t, n)
        else:
            raise ValueError(f"unknown construction {construction!r}; use gn or doubling")

        family = extend_to(start, n)
        require_mop_family(family, f"optimal_ot_graph(t={t}, n={n})")
        graph = union(family)
        if graph.m != t * (2 * n - 3):
            raise ConstructionError(f"witness for t={t}, n={n} covers {graph.m} edges, expected {t * (2 * n - 3)}")

        logger.info(f"Optimal outerthickness-{t} graph on n={n}: {graph.m} edges via {construction}")
        return OptimalWitness(graph=graph, family=family, construction=construction)


def k7_minus_e_decomposition() -> Family:
    """
    The two-member decomposition of K7 minus {0, 4}: member 0 is maximal
    outerplanar with 11 edges, member 1 is outerplanar with 9.
    """
    family = Family(t=2, n=7, members=(frozenset(K7E_MEMBER_0), frozenset(K7E_MEMBER_1)))

    if isinstance(certify_mop(family.member(0)), MopRejection):
        raise ConstructionError("K7-e member 0 is not maximal outerplanar")
    if not is_outerplanar_small(family.member(1)):
        raise ConstructionError("K7-e member 1 is not outerplanar")
    if union(family) != complete_minus_matching(7, [K7E_MISSING]):
        raise ConstructionError("K7-e members do not cover K7 minus {0, 4}")
    return family


def _require_decided(result: SearchResult, label: str) -> SearchResult:
    if result.verdict == SearchVerdict.BUDGET_EXCEEDED:
        raise BudgetExceededError(f"{label}: node cap reached after {result.explored_nodes} nodes")
    return result


def maximality_witness_k7e(budgets: Optional[Budgets] = None, include_three: bool = True) -> MaximalityWitness:
    """
    Show that K7 minus an edge is a maximal but not optimal outerthickness-2 graph.

    Searches K7 minus {0, 4} for a 2-decomposition and K7 for a refutation;
    with include_three also finds a 3-decomposition of K7.
    """
    budgets = budgets or get_budgets()
    with tracer.start_as_current_span("maximality_witness_k7e"):
        k7 = complete_graph(7)
        k7e = complete_minus_matching(7, [K7E_MISSING])

        k7e_two = _require_decided(outerthickness_exact(k7e, 2, budgets), "K7-e, k=2")
        k7_two = _require_decided(outerthickness_exact(k7, 2, budgets), "K7, k=2")
        k7_three = _require_decided(outerthickness_exact(k7, 3, budgets), "K7, k=3") if include_three else None

        optimal = 2 * (2 * 7 - 3)
        confirmed = (
            k7e_two.verdict == SearchVerdict.FOUND
            and k7_two.verdict == SearchVerdict.REFUTED
            and k7e.m < optimal
            and (k7_three is None or k7_three.verdict == SearchVerdict.FOUND)
        )
        logger.info(f"K7-e maximality: k7e_two={k7e_two.verdict.value}, k7_two={k7_two.verdict.value}, "
                    f"{k7e.m} < {optimal} edges, confirmed={confirmed}")
        return MaximalityWitness(
            k7e_two=k7e_two,
            k7_two=k7_two,
            k7_three=k7_three,
            edge_count=k7e.m,
            optimal_edge_count=optimal,
            confirmed=confirmed,
        )


def one_planar_separation(n: int) -> SeparationWitness:
    """
    An outerthickness-2 graph on n >= 8 vertices with 4n-6 edges, more
    than any 1-planar graph on n vertices can have.
    """
    if n < 8:
        raise InvalidOrderError(f"the separation needs n >= 8, got n={n}")
    witness = optimal_ot_graph(2, n)
    bound = 4 * n - 8
    return SeparationWitness(
        n=n,
        edge_count=witness.graph.m,
        one_planar_bound=bound,
        graph=witness.graph,
        separated=witness.graph.m > bound,
    )


def _k7_vertex(removed: Tuple[Edge, ...]) -> Optional[int]:
    g = Graph(n=8, edges=complete_graph(8).edges - set(removed))
    for v in range(8):
        rest = [u for u in range(8) if u != v]
        if all(g.has_edge(a, b) for a, b in combinations(rest, 2)):
            return v
    return None


def eight_vertex_cases() -> List[EightVertexCase]:
    """
    Every non-empty F in K8 without two independent edges, up to isomorphism.

    Such an F is a star with 1 to 7 leaves or a triangle; in each case
    K8 minus F still contains K7.
    """
    cases = []
    for leaves in range(1, 8):
        removed = tuple((0, v) for v in range(1, leaves + 1))
        cases.append(EightVertexCase(label=f"star-{leaves}", removed=removed, k7_vertex=_k7_vertex(removed)))
    triangle = ((0, 1), (0, 2), (1, 2))
    cases.append(EightVertexCase(label="triangle", removed=triangle, k7_vertex=_k7_vertex(triangle)))
    return cases


def maximal_equals_optimal_on_eight(budgets: Optional[Budgets] = None) -> EightVertexVerdict:
    """
    Check that every maximal outerthickness-2 graph on 8 vertices is optimal.

    A maximal graph K8 - F with two independent edges in F must be K8 minus
    a 2-matching, which the construction covers with 26 edges. Any other F
    leaves a K7, whose outerthickness is 3.
    """
    budgets = budgets or get_budgets()
    cases = eight_vertex_cases()
    k7_two = _require_decided(outerthickness_exact(complete_graph(7), 2, budgets), "K7, k=2")
    k7_refuted = k7_two.verdict == SearchVerdict.REFUTED

    witness = optimal_ot_graph(2, 8)
    matching_optimal = (
        witness.graph == complete_minus_matching(8, missing_matching(2))
        and witness.graph.m == 2 * (2 * 8 - 3)
    )

    holds = k7_refuted and matching_optimal and all(case.contains_k7 for case in cases)
    logger.info(f"Eight-vertex check: {len(cases)} cases, k7_refuted={k7_refuted}, "
                f"matching_optimal={matching_optimal}, holds={holds}")
    return EightVertexVerdict(cases=cases, k7_refuted=k7_refuted, matching_optimal=matching_optimal, holds=holds)
