import json
import logging
from typing import List
import pandas as pd
from pydantic import BaseModel
from ..bounds.lower_bound import BoundReport
from ..certify.search import SearchResult
from ..flow import VerificationReport

# Set up logging
logger = logging.getLogger(__name__)


def _profile(profile) -> str:
    return " ".join(f"{d}:{count}" for d, count in sorted(profile.items()))


def _yes_no(value) -> str:
    if value is None:
        return "-"
    return "yes" if value else "no"


def format_verification(report: VerificationReport) -> str:
    """
    Render a verification report as text: a summary, the member table and
    the failed checks.
    """
    lines: List[str] = [
        f"family t={report.t} n={report.n} mode={report.mode.value}",
        f"valid: {_yes_no(report.valid)}",
    ]

    if report.members:
        df = pd.DataFrame([
            {
                "member": m.index,
                "edges": m.edge_count,
                "expected": m.expected_edge_count,
                "max_degree": m.max_degree,
                "step": "-" if m.step is None else m.step,
                "certified": _yes_no(m.certified),
                "outerplanar": _yes_no(m.outerplanar),
                "star": _yes_no(m.star_property),
                "reason": m.reason or "-",
            }
            for m in report.members
        ])
        lines.append(df.to_string(index=False))

    if report.disjoint is not None:
        collision = ""
        if report.collision is not None:
            i, j, (u, v) = report.collision
            collision = f" (members {i} and {j} share {u} {v})"
        lines.append(f"disjoint: {_yes_no(report.disjoint)}{collision}")
    if report.union_edge_count is not None:
        expected = "" if report.expected_union_edge_count is None else f" expected={report.expected_union_edge_count}"
        lines.append(f"union: edges={report.union_edge_count}{expected} max_degree={report.union_max_degree}")
        lines.append(f"union degree profile: {_profile(report.union_degree_profile)}")
        shown = " ".join(f"{u}-{v}" for u, v in report.missing_pairs)
        more = report.missing_pair_count - len(report.missing_pairs)
        lines.append(f"missing pairs ({report.missing_pair_count}): {shown}{f' ... +{more}' if more else ''}".rstrip())
    if report.bound is not None:
        lines.append(format_bound(report.bound).rstrip("\n"))

    for error in report.errors:
        lines.append(f"error [{error['step']}] {error['message']}")
    return "\n".join(lines) + "\n"


def format_bound(report: BoundReport) -> str:
    r1, r2 = report.roots
    return "\n".join([
        f"bound t={report.t} n={report.n}: {report.verdict.value}",
        f"  edges needed t(2n-3) = {report.total_edges}, capacity C(n,2) = {report.capacity}",
        f"  f(n) = {report.f_value}, roots {r1:.4f} and {r2:.4f}, minimum order {report.min_vertices}",
        f"  counting infeasible: {_yes_no(report.counting_infeasible)}, "
        f"below minimum order: {_yes_no(report.lemma_infeasible)}",
    ]) + "\n"


def format_search(result: SearchResult) -> str:
    lines = [f"search k={result.k}: {result.verdict.value} after {result.explored_nodes} nodes"]
    if result.parts is not None:
        for index, part in enumerate(result.parts):
            lines.append(f"part {index}: " + " ".join(f"{u}-{v}" for u, v in part))
    return "\n".join(lines) + "\n"


def to_json(model: BaseModel) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(json.loads(model.model_dump_json()), indent=2, sort_keys=True) + "\n"
