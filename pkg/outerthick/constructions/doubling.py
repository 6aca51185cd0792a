"""
Label-doubling construction: 2^s edge-disjoint maximal outerplanar graphs on
2^(s+2) vertices with maximum degree 2s+3.

Every member has an arithmetic outer cycle (0, d, 2d, ...) modulo its order
for an odd step d. Doubling a level-s member k yields member k (labels
doubled, step d) and member 2^s + k (labels doubled plus one, step
d + 2^(s+2)) at level s+1; each old outer edge gets a new triangle apex.
"""
import logging
from enum import Enum
from typing import List, Optional, Set
from pydantic import BaseModel, Field, model_validator
from ..certify.mop import MopRejection, certify_mop
from ..config import Budgets, get_budgets
from ..core.errors import BudgetExceededError, ConstructionError, InvalidFamilyError, StarPropertyError
from ..core.graph_ops import complete_minus_matching, union
from ..core.models import Edge, Family, Graph, canonical_edge
from ..utils.tracing import get_tracer
from .checks import require_mop_family

# Set up logging
logger = logging.getLogger(__name__)

# Set up tracing
tracer = get_tracer("doubling_construction")


class Variant(str, Enum):
    EVEN = "even"
    ODD = "odd"


class StarGraph(BaseModel):
    """A level-s member together with the odd step of its arithmetic outer cycle."""
    graph: Graph
    step: int = Field(..., description="Outer-cycle step d; odd")
    index: int = Field(..., ge=0, description="Member index k in [2^s]_0")
    level: int = Field(..., ge=0, description="Level s; the order is 2^(s+2)")

    @model_validator(mode="after")
    def _check_shape(self) -> "StarGraph":
        if self.graph.n != 2 ** (self.level + 2):
            raise ValueError(f"level {self.level} needs order {2 ** (self.level + 2)}, got {self.graph.n}")
        if self.step % 2 == 0 or not 0 < self.step < self.graph.n:
            raise ValueError(f"step {self.step} is not an odd element of [{self.graph.n}]_0")
        if self.index >= 2 ** self.level:
            raise ValueError(f"index {self.index} outside [{2 ** self.level}]_0")
        return self


def star_cycle(n: int, d: int) -> List[int]:
    return [(j * d) % n for j in range(n)]


def star_cycle_edges(n: int, d: int) -> Set[Edge]:
    return {canonical_edge((j * d) % n, ((j + 1) * d) % n) for j in range(n)}


def has_star_property(g: Graph, d: int) -> bool:
    """True iff g is maximal outerplanar with outer cycle (0, d, 2d, ...) mod n."""
    certificate = certify_mop(g)
    if isinstance(certificate, MopRejection):
        return False
    return set(certificate.cycle_edges()) == star_cycle_edges(g.n, d)


def level_of(n: int) -> int:
    """Return s with n = 2^(s+2), or raise if n is not such a power of two."""
    if n < 4 or n & (n - 1):
        raise InvalidFamilyError(f"order {n} is not 2^(s+2) for any s >= 0")
    return n.bit_length() - 3


def base_star() -> StarGraph:
    g = Graph(n=4, edges=frozenset({(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)}))
    return StarGraph(graph=g, step=1, index=0, level=0)


def base_family() -> Family:
    """The single level-0 member: the 4-cycle 0,1,2,3 with chord {0,2}, step 1."""
    star = base_star()
    return Family.from_graphs([star.graph], steps=[star.step])


def double_graph(g: StarGraph, variant: Variant) -> StarGraph:
    """
    Lift a level-s member to level s+1.

    Args:
        g: A level-s member; its arithmetic outer cycle is checked first.
        variant: EVEN keeps index k and step d; ODD gives index 2^s + k and
            step d + 2^(s+2).

    Returns:
        The level-(s+1) member with 2^(s+3) vertices and 2^(s+4) - 3 edges.
    """
    variant = Variant(variant)
    if not has_star_property(g.graph, g.step):
        raise StarPropertyError(f"member {g.index} at level {g.level} has no outer cycle with step {g.step}")

    old_n = g.graph.n
    new_n = 2 * old_n
    offset = 0 if variant == Variant.EVEN else 1
    x = g.step if variant == Variant.EVEN else g.step + old_n

    def lift(v: int) -> int:
        return (2 * v + offset) % new_n

    edges = {canonical_edge(lift(u), lift(v)) for u, v in g.graph.edges}
    cycle = star_cycle(old_n, g.step)
    for j, v in enumerate(cycle):
        a = lift(v)
        b = lift(cycle[(j + 1) % old_n])
        apex = (a + x) % new_n
        edges.add(canonical_edge(a, apex))
        edges.add(canonical_edge(apex, b))

    index = g.index if variant == Variant.EVEN else 2 ** g.level + g.index
    lifted = StarGraph(graph=Graph(n=new_n, edges=frozenset(edges)), step=x, index=index, level=g.level + 1)
    if not has_star_property(lifted.graph, lifted.step):
        raise ConstructionError(f"doubling member {g.index} ({variant.value}) lost the arithmetic outer cycle")
    return lifted


def doubling_stars(s: int, budgets: Optional[Budgets] = None) -> List[StarGraph]:
    """Build the level-s members in index order."""
    budgets = budgets or get_budgets()
    if not isinstance(s, int) or s < 0:
        raise ValueError(f"level must be a non-negative integer, got {s!r}")
    if s > budgets.doubling_max_s:
        raise BudgetExceededError(f"doubling level {s} above the configured cap {budgets.doubling_max_s}")

    stars = [base_star()]
    for level in range(s):
        lifted: List[Optional[StarGraph]] = [None] * (2 ** (level + 1))
        for star in stars:
            lifted[star.index] = double_graph(star, Variant.EVEN)
            lifted[2 ** level + star.index] = double_graph(star, Variant.ODD)
        stars = lifted
    return stars


def target_graph(s: int) -> Graph:
    """
    The graph covered by the level-s family: K_{2^(s+2)} minus the matching
    {i, i+2^(s+1)} for 2^s <= i < 2^(s+1). It has 2^s (2^(s+3) - 3) edges.
    """
    if s < 0:
        raise ValueError(f"level must be non-negative, got {s}")
    half = 2 ** (s + 1)
    return complete_minus_matching(2 ** (s + 2), [(i, i + half) for i in range(2 ** s, half)])


def doubling_family(s: int, budgets: Optional[Budgets] = None) -> Family:
    """
    Build the 2^s members at level s and verify them.

    Every member is certified, members are pairwise disjoint and their union
    is target_graph(s); any failure raises ConstructionError.
    """
    with tracer.start_as_current_span("doubling_family") as span:
        span.set_attribute("s", s)

        stars = doubling_stars(s, budgets)
        f = Family.from_graphs([star.graph for star in stars], steps=[star.step for star in stars])
        require_mop_family(f, f"doubling_family(s={s})")
        if union(f) != target_graph(s):
            raise ConstructionError(f"doubling_family(s={s}): union differs from the target graph")

        logger.info(f"Built doubling family at level s={s}: {f.t} members on n={f.n} vertices")
        span.set_attribute("member_count", f.t)
        return f


def realized_steps(f: Family) -> Set[int]:
    """
    Steps realized by the members' outer cycles, read in both directions.

    A member whose outer cycle is not arithmetic contributes nothing.
    """
    steps: Set[int] = set()
    for g in f.graphs():
        certificate = certify_mop(g)
        if isinstance(certificate, MopRejection):
            continue
        d = certificate.cycle[1]
        if set(certificate.cycle_edges()) == star_cycle_edges(g.n, d):
            steps.update({d, (g.n - d) % g.n})
    return steps


def check_claim1(f: Family) -> bool:
    """Every odd residue mod n is the step of some member's outer cycle."""
    odd = {d for d in range(1, f.n, 2)}
    return odd <= realized_steps(f)


def check_claim2(f: Family) -> bool:
    """Every middle edge {i, i+2^(s+1)}, i in [2^s]_0, lies in some member."""
    s = level_of(f.n)
    covered = frozenset().union(*f.members)
    half = 2 ** (s + 1)
    return all((i, i + half) in covered for i in range(2 ** s))


def figure_order(f: Family) -> List[int]:
    """
    Presentation order pairing each member k with its odd sibling 2^(s-1) + k,
    e.g. 0, 2, 1, 3 at level 2.
    """
    if f.t == 1:
        return [0]
    half = f.t // 2
    order = []
    for k in range(half):
        order.extend([k, half + k])
    return order
