import logging
import math
from enum import Enum
from typing import Tuple
from pydantic import BaseModel, Field
from ..core.errors import InvalidOrderError

# Set up logging
logger = logging.getLogger(__name__)


class BoundVerdict(str, Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


class BoundReport(BaseModel):
    """
    Edge-counting check for t edge-disjoint maximal outerplanar graphs on n vertices.

    Two mechanisms are reported separately: raw counting (t(2n-3) edges must
    fit into C(n,2)) and the minimum order from the quadratic-root argument
    (n >= 4t for t >= 2). For n >= 3 they always agree, since
    C(n,2) - t(2n-3) = f(n)/2.
    """
    t: int
    n: int
    total_edges: int = Field(..., description="t(2n-3)")
    capacity: int = Field(..., description="C(n,2)")
    f_value: int = Field(..., description="n^2 - (4t+1)n + 6t")
    roots: Tuple[float, float] = Field(..., description="Roots r1 <= r2 of f, for display only")
    min_vertices: int
    counting_infeasible: bool
    lemma_infeasible: bool
    verdict: BoundVerdict


def min_vertices(t: int) -> int:
    """Smallest n admitting t edge-disjoint maximal outerplanar graphs: 3 for t=1, else 4t."""
    if not isinstance(t, int) or t < 1:
        raise InvalidOrderError(f"t must be a positive integer, got {t!r}")
    return 3 if t == 1 else 4 * t


def quadratic(t: int, n: int) -> int:
    return n * n - (4 * t + 1) * n + 6 * t


def counting_check(t: int, n: int) -> BoundReport:
    """
    Build the counting report for (t, n).

    Args:
        t: Number of members, at least 1.
        n: Number of vertices, at least 3.

    Returns:
        The report; the verdict is infeasible iff t(2n-3) > C(n,2).
    """
    if t < 1:
        raise InvalidOrderError(f"t must be a positive integer, got {t}")
    if n < 3:
        raise InvalidOrderError(f"n must be at least 3, got {n}")

    total = t * (2 * n - 3)
    capacity = n * (n - 1) // 2
    f_value = quadratic(t, n)
    root = math.sqrt((4 * t + 1) ** 2 - 24 * t)
    roots = (((4 * t + 1) - root) / 2, ((4 * t + 1) + root) / 2)
    counting_infeasible = total > capacity
    lemma_infeasible = n < min_vertices(t)

    if counting_infeasible != (f_value < 0):
        raise AssertionError(f"counting and quadratic disagree at t={t}, n={n}")

    verdict = BoundVerdict.INFEASIBLE if counting_infeasible or lemma_infeasible else BoundVerdict.FEASIBLE
    logger.debug(f"counting_check(t={t}, n={n}): {total} vs {capacity}, f={f_value}, {verdict.value}")
    return BoundReport(
        t=t,
        n=n,
        total_edges=total,
        capacity=capacity,
        f_value=f_value,
        roots=roots,
        min_vertices=min_vertices(t),
        counting_infeasible=counting_infeasible,
        lemma_infeasible=lemma_infeasible,
        verdict=verdict,
    )
