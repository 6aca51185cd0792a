import logging
from typing import List, Optional, Set, Tuple
from pydantic import BaseModel, Field, model_validator
from ..certify.mop import MopRejection, certify_mop, cycle_edges
from ..core.errors import InvalidFamilyError, PlanningError
from ..core.models import Edge, Family, canonical_edge
from ..utils.tracing import get_tracer
from .checks import require_mop_family

# Set up logging
logger = logging.getLogger(__name__)

# Set up tracing
tracer = get_tracer("extension")


class ExtensionPlan(BaseModel):
    """One outer-cycle edge per member, forming a matching, plus the new vertex label."""
    matching: Tuple[Edge, ...] = Field(..., description="matching[i] is the outer edge chosen in member i")
    x: int = Field(..., ge=0, description="Label of the new vertex; equals the old order")

    @model_validator(mode="after")
    def _check_matching(self) -> "ExtensionPlan":
        endpoints = [v for edge in self.matching for v in edge]
        if len(endpoints) != len(set(endpoints)):
            raise ValueError("chosen edges share an endpoint")
        if any(v >= self.x for v in endpoints):
            raise ValueError(f"new vertex {self.x} is not a fresh label")
        return self


def _outer_edges(f: Family) -> List[List[Edge]]:
    outer = []
    for k, g in enumerate(f.graphs()):
        certificate = certify_mop(g)
        if isinstance(certificate, MopRejection):
            raise InvalidFamilyError(f"member {k} is not maximal outerplanar: {certificate.detail}")
        outer.append(sorted(cycle_edges(certificate.cycle)))
    return outer


def plan_extension(f: Family) -> ExtensionPlan:
    """
    Greedily choose a matching with one outer-cycle edge per member.

    Members are processed in index order; each takes its lexicographically
    smallest outer edge with no endpoint already used.

    Args:
        f: A family of certified maximal outerplanar graphs.

    Returns:
        The plan; raises PlanningError if some member has only blocked edges.
    """
    with tracer.start_as_current_span("plan_extension") as span:
        span.set_attribute("t", f.t)
        span.set_attribute("n", f.n)

        used: Set[int] = set()
        matching: List[Edge] = []
        for i, outer in enumerate(_outer_edges(f)):
            choice = next((e for e in outer if e[0] not in used and e[1] not in used), None)
            if choice is None:
                logger.error(f"All {len(outer)} outer edges of member {i} are blocked at n={f.n}")
                raise PlanningError(f"member {i} has no non-blocked outer edge at n={f.n}", n=f.n, member=i)
            matching.append(choice)
            used.update(choice)

        return ExtensionPlan(matching=tuple(matching), x=f.n)


def extend_family(f: Family, p: ExtensionPlan) -> Family:
    """
    Add vertex x = n to every member, joined to both ends of its planned edge.

    Args:
        f: The family on n vertices.
        p: A plan for f.

    Returns:
        The family on n+1 vertices; each member gains exactly two edges.
    """
    if p.x != f.n or len(p.matching) != f.t:
        raise InvalidFamilyError(f"plan for {len(p.matching)} members at x={p.x} does not fit {f!r}")
    outer = _outer_edges(f)
    for i, (u, v) in enumerate(p.matching):
        if (u, v) not in outer[i]:
            raise InvalidFamilyError(f"planned edge {(u, v)} is not on the outer cycle of member {i}")

    x = p.x
    members = tuple(
        member | {canonical_edge(u, x), canonical_edge(v, x)}
        for member, (u, v) in zip(f.members, p.matching)
    )
    return Family(t=f.t, n=f.n + 1, members=members)


def extend_to(f: Family, n_target: int, strict: bool = False) -> Family:
    """
    Extend a family one vertex at a time until it has n_target vertices.

    Args:
        f: The starting family.
        n_target: Desired order, at least f.n.
        strict: Verify every intermediate family instead of only the result.

    Returns:
        The extended family (f itself when n_target == f.n).
    """
    if n_target < f.n:
        raise ValueError(f"cannot shrink a family from n={f.n} to n={n_target}")

    with tracer.start_as_current_span("extend_to") as span:
        span.set_attribute("t", f.t)
        span.set_attribute("from_n", f.n)
        span.set_attribute("to_n", n_target)
        span.set_attribute("strict", strict)

        current = f
        while current.n < n_target:
            try:
                plan = plan_extension(current)
            except PlanningError as e:
                raise PlanningError(f"extension failed at intermediate n={current.n}: {e}",
                                    n=current.n, member=e.member) from e
            current = extend_family(current, plan)
            if strict:
                require_mop_family(current, f"extension to n={current.n}")

        if not strict and current.n != f.n:
            require_mop_family(current, f"extension to n={current.n}")

        logger.info(f"Extended family of t={f.t} members from n={f.n} to n={current.n}")
        return current
