import logging
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple
from langgraph.graph import END, StateGraph
from pydantic import BaseModel, Field
from .bounds.lower_bound import BoundReport, BoundVerdict, counting_check
from .certify.mop import MopRejection, certify_mop, verify_certificate
from .certify.outerplanar import is_outerplanar_small
from .config import Budgets, get_budgets
from .constructions.doubling import has_star_property
from .core.errors import BudgetExceededError
from .core.graph_ops import degree_profile, edges_disjoint, max_degree, missing_pairs, union
from .core.models import Edge, Family
from .utils.tracing import get_tracer, record, setup_tracing

# Set up logging
logger = logging.getLogger(__name__)

# Set up tracing
setup_tracing()
tracer = get_tracer("verification_flow")

# Longer lists of uncovered pairs are truncated in reports.
MISSING_PAIRS_SHOWN = 32


class VerificationMode(str, Enum):
    MAXIMAL = "maximal"
    OUTERPLANAR = "outerplanar"


class MemberReport(BaseModel):
    index: int
    edge_count: int
    expected_edge_count: int = Field(..., description="2n-3")
    max_degree: int
    step: Optional[int] = None
    certified: bool = Field(..., description="Certified maximal outerplanar, certificate re-checked")
    reason: Optional[str] = Field(default=None, description="Rejection reason when not certified")
    outerplanar: Optional[bool] = Field(default=None, description="Outerplanarity verdict, None if undecided")
    star_property: Optional[bool] = Field(default=None, description="Arithmetic outer cycle with the recorded step")
    degree_profile: Dict[int, int] = Field(default_factory=dict)


class VerificationState(BaseModel):
    """State shared by the verification steps; errors accumulate like the steps' results."""
    family: Optional[Family] = None
    mode: VerificationMode = VerificationMode.MAXIMAL

    members: List[MemberReport] = Field(default_factory=list)
    disjoint: Optional[bool] = None
    collision: Optional[Tuple[int, int, Edge]] = None
    union_edge_count: Optional[int] = None
    union_max_degree: Optional[int] = None
    union_degree_profile: Dict[int, int] = Field(default_factory=dict)
    missing_pair_count: Optional[int] = None
    missing_pairs: List[Edge] = Field(default_factory=list)
    bound: Optional[BoundReport] = None

    errors: List[Dict[str, Any]] = Field(default_factory=list, description="Failed checks, in order")

    def add_error(self, step: str, message: str, error_type: str = "general") -> None:
        self.errors.append({"step": step, "message": message, "type": error_type})

    def has_errors(self) -> bool:
        return len(self.errors) > 0


class VerificationReport(BaseModel):
    """Everything checked about a family; valid iff no check failed."""
    t: Optional[int] = None
    n: Optional[int] = None
    mode: VerificationMode
    members: List[MemberReport] = Field(default_factory=list)
    disjoint: Optional[bool] = None
    collision: Optional[Tuple[int, int, Edge]] = None
    union_edge_count: Optional[int] = None
    expected_union_edge_count: Optional[int] = None
    union_max_degree: Optional[int] = None
    union_degree_profile: Dict[int, int] = Field(default_factory=dict)
    missing_pair_count: Optional[int] = None
    missing_pairs: List[Edge] = Field(default_factory=list)
    bound: Optional[BoundReport] = None
    errors: List[Dict[str, Any]] = Field(default_factory=list)
    valid: bool


class VerificationGraph:
    """
    The verification pipeline as a LangGraph flow:
    validate_family -> certify_members -> check_disjointness -> union_statistics -> bound_checks.
    A malformed family skips straight to the end.
    """

    def __init__(self, budgets: Optional[Budgets] = None):
        self.budgets = budgets or get_budgets()
        self.graph = self.build_graph().compile()

    def build_graph(self) -> StateGraph:
        graph = StateGraph(VerificationState)

        graph.add_node("validate_family", self.validate_family)
        graph.add_node("certify_members", self.certify_members)
        graph.add_node("check_disjointness", self.check_disjointness)
        graph.add_node("union_statistics", self.union_statistics)
        graph.add_node("bound_checks", self.bound_checks)

        graph.set_entry_point("validate_family")
        graph.add_conditional_edges(
            "validate_family",
            self.check_for_errors,
            {
                "error": END,
                "success": "certify_members",
            },
        )
        graph.add_edge("certify_members", "check_disjointness")
        graph.add_edge("check_disjointness", "union_statistics")
        graph.add_edge("union_statistics", "bound_checks")
        graph.add_edge("bound_checks", END)
        return graph

    def check_for_errors(self, state: VerificationState) -> str:
        return "error" if state.has_errors() else "success"

    def validate_family(self, state: VerificationState) -> Dict[str, Any]:
        with tracer.start_as_current_span("validate_family") as span:
            f = state.family
            if f is None:
                state.add_error("validate_family", "no family given", "invalid_family")
            elif f.n < 3:
                state.add_error("validate_family", f"order n={f.n} is below 3", "invalid_family")
            else:
                span.set_attribute("t", f.t)
                span.set_attribute("n", f.n)
                logger.info(f"Verifying {f!r} in {state.mode.value} mode")
            return {"errors": state.errors}

    def certify_members(self, state: VerificationState) -> Dict[str, Any]:
        """
        Certify each member, re-check every certificate and, in outerplanar
        mode, fall back to the exact oracle for non-maximal members.
        """
        with tracer.start_as_current_span("certify_members") as span:
            f = state.family
            reports = []
            for k, g in enumerate(f.graphs()):
                try:
                    result = certify_mop(g)
                    certified = not isinstance(result, MopRejection) and verify_certificate(g, result)
                    reason = result.reason.value if isinstance(result, MopRejection) else None
                    if not isinstance(result, MopRejection) and not certified:
                        reason = "certificate_failed_recheck"

                    outerplanar: Optional[bool] = True if certified else None
                    if not certified and state.mode == VerificationMode.OUTERPLANAR:
                        try:
                            outerplanar = is_outerplanar_small(g, self.budgets)
                        except BudgetExceededError as e:
                            state.add_error("certify_members", f"member {k}: {e}", "budget")

                    step = f.step(k)
                    star = has_star_property(g, step) if step is not None else None

                    reports.append(MemberReport(
                        index=k,
                        edge_count=g.m,
                        expected_edge_count=2 * f.n - 3,
                        max_degree=max_degree(g),
                        step=step,
                        certified=certified,
                        reason=reason,
                        outerplanar=outerplanar,
                        star_property=star,
                        degree_profile=degree_profile(g),
                    ))

                    if state.mode == VerificationMode.MAXIMAL and not certified:
                        logger.warning(f"Member {k} is not maximal outerplanar: {reason}")
                        state.add_error("certify_members", f"member {k} is not maximal outerplanar ({reason})", "member")
                    elif state.mode == VerificationMode.OUTERPLANAR and outerplanar is False:
                        logger.warning(f"Member {k} is not outerplanar")
                        state.add_error("certify_members", f"member {k} is not outerplanar", "member")
                    if star is False:
                        logger.warning(f"Member {k} does not have an outer cycle with step {step}")
                        state.add_error("certify_members", f"member {k} has no outer cycle with step {step}", "member")
                except Exception as e:
                    error_msg = f"Error certifying member {k}: {str(e)}"
                    logger.error(error_msg)
                    state.add_error("certify_members", error_msg)

            span.set_attribute("member_count", len(reports))
            span.set_attribute("certified", sum(1 for r in reports if r.certified))
            return {"members": reports, "errors": state.errors}

    def check_disjointness(self, state: VerificationState) -> Dict[str, Any]:
        with tracer.start_as_current_span("check_disjointness") as span:
            result = edges_disjoint(state.family)
            span.set_attribute("disjoint", result.disjoint)
            if not result.disjoint:
                i, j, edge = result.witness
                logger.warning(f"Members {i} and {j} share edge {edge}")
                state.add_error("check_disjointness", f"members {i} and {j} share edge {edge}", "collision")
            return {"disjoint": result.disjoint, "collision": result.witness, "errors": state.errors}

    def union_statistics(self, state: VerificationState) -> Dict[str, Any]:
        with tracer.start_as_current_span("union_statistics") as span:
            f = state.family
            g = union(f)
            missing = missing_pairs(g)
            span.set_attribute("union_edge_count", g.m)

            if state.mode == VerificationMode.MAXIMAL and state.disjoint and g.m != f.t * (2 * f.n - 3):
                state.add_error(
                    "union_statistics",
                    f"union has {g.m} edges, expected t(2n-3) = {f.t * (2 * f.n - 3)}",
                    "union",
                )
            return {
                "union_edge_count": g.m,
                "union_max_degree": max_degree(g),
                "union_degree_profile": degree_profile(g),
                "missing_pair_count": len(missing),
                "missing_pairs": missing[:MISSING_PAIRS_SHOWN],
                "errors": state.errors,
            }

    def bound_checks(self, state: VerificationState) -> Dict[str, Any]:
        with tracer.start_as_current_span("bound_checks") as span:
            f = state.family
            report = counting_check(f.t, f.n)
            record(span, verdict=report.verdict)
            if state.mode == VerificationMode.MAXIMAL and report.verdict == BoundVerdict.INFEASIBLE:
                state.add_error(
                    "bound_checks",
                    f"{f.t} maximal outerplanar members cannot share n={f.n} vertices "
                    f"({report.total_edges} > {report.capacity} or n < {report.min_vertices})",
                    "bound",
                )
            return {"bound": report, "errors": state.errors}

    def verify(self, family: Family, allow_nonmaximal: bool = False) -> VerificationReport:
        """
        Run the pipeline on a family.

        Args:
            family: The family to verify.
            allow_nonmaximal: Require members to be outerplanar only, not maximal.

        Returns:
            The verification report.
        """
        mode = VerificationMode.OUTERPLANAR if allow_nonmaximal else VerificationMode.MAXIMAL
        with tracer.start_as_current_span("verify_family") as span:
            record(span, mode=mode)

            result = self.graph.invoke({"family": family, "mode": mode})
            final = VerificationState(**result) if isinstance(result, dict) else result

            report = build_report(final)
            span.set_attribute("valid", report.valid)
            logger.info(f"Verification of {family!r}: valid={report.valid}, {len(report.errors)} errors")
            return report


def build_report(state: VerificationState) -> VerificationReport:
    f = state.family
    expected_union = None
    if f is not None and state.mode == VerificationMode.MAXIMAL:
        expected_union = f.t * (2 * f.n - 3)
    return VerificationReport(
        t=f.t if f is not None else None,
        n=f.n if f is not None else None,
        mode=state.mode,
        members=state.members,
        disjoint=state.disjoint,
        collision=state.collision,
        union_edge_count=state.union_edge_count,
        expected_union_edge_count=expected_union,
        union_max_degree=state.union_max_degree,
        union_degree_profile=state.union_degree_profile,
        missing_pair_count=state.missing_pair_count,
        missing_pairs=state.missing_pairs,
        bound=state.bound,
        errors=state.errors,
        valid=not state.has_errors(),
    )


def verify_family(f: Family, allow_nonmaximal: bool = False, budgets: Optional[Budgets] = None) -> VerificationReport:
    return VerificationGraph(budgets).verify(f, allow_nonmaximal=allow_nonmaximal)
