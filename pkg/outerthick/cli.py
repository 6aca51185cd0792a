import argparse
import logging
import os
import sys
from typing import Callable, Dict, List, Optional
from .bounds.coloring import chromatic_number_exact
from .bounds.gallery import (
    k7_minus_e_decomposition,
    maximal_equals_optimal_on_eight,
    maximality_witness_k7e,
    optimal_ot_graph,
)
from .bounds.lower_bound import BoundVerdict, counting_check
from .certify.mop import MopRejection, certify_mop
from .certify.search import SearchVerdict, outerthickness_exact
from .config import CliConfig, get_budgets
from .constructions.doubling import doubling_family, figure_order
from .constructions.extension import extend_to
from .constructions.gn import gn_family
from .core.errors import BudgetExceededError, ConstructionError, OuterthickError, PlanningError
from .core.graph_ops import union
from .core.models import Family, Graph
from .flow import verify_family
from .formats.exporters import emit_dot, emit_edgelist, emit_family_dot, emit_graph6
from .formats.family_file import emit_family, read_family
from .formats.report import format_bound, format_search, format_verification, to_json

# Set up logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outerthick",
        description="Build, extend and certify families of edge-disjoint maximal outerplanar graphs",
    )
    parser.add_argument("--budgets", default=None, help="Budget overrides, e.g. oracle_max_n=24,search_node_cap=1000000")
    parser.add_argument("--output", default=None, help="Write the artifact to this path instead of stdout")
    parser.add_argument("--strict-format", action="store_true", help="Reject unsorted edges in family files")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="Build a family")
    kinds = construct.add_subparsers(dest="kind", required=True)
    gn = kinds.add_parser("gn", help="t members on 4t vertices, maximum degree t+3")
    gn.add_argument("--t", type=int, required=True)
    gn.add_argument("--n", type=int, default=None, help="Extend the family to n vertices")
    gn.add_argument("--strict", action="store_true", help="Verify every intermediate family")
    doubling = kinds.add_parser("doubling", help="2^s members on 2^(s+2) vertices, maximum degree 2s+3")
    doubling.add_argument("--s", type=int, required=True)
    doubling.add_argument("--n", type=int, default=None, help="Extend the family to n vertices")
    doubling.add_argument("--strict", action="store_true", help="Verify every intermediate family")

    extend = sub.add_parser("extend", help="Extend a family file to more vertices")
    extend.add_argument("--input", required=True)
    extend.add_argument("--to", type=int, required=True)
    extend.add_argument("--strict", action="store_true", help="Verify every intermediate family")

    verify = sub.add_parser("verify", help="Verify a family file")
    verify.add_argument("--input", required=True)
    verify.add_argument("--allow-nonmaximal", action="store_true", help="Require outerplanar members only")
    verify.add_argument("--format", choices=["text", "json"], default="text")

    bounds = sub.add_parser("bounds", help="Edge-counting check for t members on n vertices")
    bounds.add_argument("--t", type=int, required=True)
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--format", choices=["text", "json"], default="text")

    gallery = sub.add_parser("gallery", help="Named families and witnesses")
    gallery.add_argument("name", choices=["k7e", "k8m", "figure2", "maximality", "eight"])

    search = sub.add_parser("search", help="Exhaustive searches")
    searches = search.add_subparsers(dest="kind", required=True)
    ot = searches.add_parser("ot", help="Split the union (or one member) into k outerplanar graphs")
    ot.add_argument("--input", required=True)
    ot.add_argument("--k", type=int, required=True)
    ot.add_argument("--budget", type=int, default=None, help="Node cap for this search")
    ot.add_argument("--member", type=int, default=None)

    color = sub.add_parser("color", help="Exact chromatic number of the union (or one member)")
    color.add_argument("--input", required=True)
    color.add_argument("--member", type=int, default=None)

    export = sub.add_parser("export", help="Export the union (or one member) of a family file")
    export.add_argument("--input", required=True)
    export.add_argument("--format", choices=["edgelist", "graph6", "dot"], required=True)
    export.add_argument("--member", type=int, default=None)
    return parser


class CommandResult:
    def __init__(self, text: str, status: int = EXIT_OK):
        self.text = text
        self.status = status


def _selected_graph(f: Family, member: Optional[int]) -> Graph:
    if member is None:
        return union(f)
    if not 0 <= member < f.t:
        raise OuterthickError(f"member {member} outside [0, {f.t})")
    return f.member(member)


def _maybe_extend(f: Family, n: Optional[int], strict: bool) -> Family:
    return f if n is None else extend_to(f, n, strict=strict)


def cmd_construct(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    if args.kind == "gn":
        f = gn_family(args.t)
    else:
        f = doubling_family(args.s, config.budgets)
    return CommandResult(emit_family(_maybe_extend(f, args.n, config.strict)))


def cmd_extend(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    f = read_family(args.input, strict=config.strict_format)
    return CommandResult(emit_family(extend_to(f, args.to, strict=config.strict)))


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    f = read_family(args.input, strict=config.strict_format)
    report = verify_family(f, allow_nonmaximal=args.allow_nonmaximal, budgets=config.budgets)
    text = to_json(report) if config.output_format == "json" else format_verification(report)
    return CommandResult(text, EXIT_OK if report.valid else EXIT_FAILED)


def cmd_bounds(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    report = counting_check(args.t, args.n)
    text = to_json(report) if config.output_format == "json" else format_bound(report)
    return CommandResult(text, EXIT_OK if report.verdict == BoundVerdict.FEASIBLE else EXIT_FAILED)


def cmd_gallery(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    if args.name == "k7e":
        return CommandResult(emit_family(k7_minus_e_decomposition()))
    if args.name == "k8m":
        return CommandResult(emit_family(optimal_ot_graph(2, 8).family))
    if args.name == "figure2":
        return CommandResult(emit_family(doubling_family(1, config.budgets)))
    if args.name == "maximality":
        witness = maximality_witness_k7e(config.budgets)
        return CommandResult(to_json(witness), EXIT_OK if witness.confirmed else EXIT_FAILED)
    verdict = maximal_equals_optimal_on_eight(config.budgets)
    return CommandResult(to_json(verdict), EXIT_OK if verdict.holds else EXIT_FAILED)


def cmd_search(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    f = read_family(args.input, strict=config.strict_format)
    g = _selected_graph(f, args.member)
    result = outerthickness_exact(g, args.k, config.budgets, node_cap=args.budget)
    status = {
        SearchVerdict.FOUND: EXIT_OK,
        SearchVerdict.REFUTED: EXIT_FAILED,
        SearchVerdict.BUDGET_EXCEEDED: EXIT_BUDGET,
    }[result.verdict]
    return CommandResult(format_search(result), status)


def cmd_color(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    f = read_family(args.input, strict=config.strict_format)
    g = _selected_graph(f, args.member)
    return CommandResult(f"{chromatic_number_exact(g, config.budgets)}\n")


def cmd_export(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    f = read_family(args.input, strict=config.strict_format)
    if config.output_format == "dot" and args.member is None:
        certificates = [certify_mop(g) for g in f.graphs()]
        certificates = [None if isinstance(c, MopRejection) else c for c in certificates]
        order = figure_order(f) if f.steps and (f.t == 1 or f.t % 2 == 0) else None
        return CommandResult(emit_family_dot(f, certificates, order))

    g = _selected_graph(f, args.member)
    if config.output_format == "graph6":
        return CommandResult(emit_graph6(g) + "\n")
    if config.output_format == "edgelist":
        return CommandResult(emit_edgelist(g))
    certificate = certify_mop(g)
    return CommandResult(emit_dot(g, None if isinstance(certificate, MopRejection) else certificate))


COMMANDS: Dict[str, Callable[[argparse.Namespace, CliConfig], CommandResult]] = {
    "construct": cmd_construct,
    "extend": cmd_extend,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "gallery": cmd_gallery,
    "search": cmd_search,
    "color": cmd_color,
    "export": cmd_export,
}


def _configure_logging(verbose: bool) -> None:
    level = "INFO" if verbose else os.getenv("LOG_LEVEL", "WARNING").upper()
    logging.getLogger().setLevel(getattr(logging, level, logging.WARNING))


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    logger.info(f"Wrote {len(text)} characters to {path}")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line and return the exit status:
    0 success, 1 verification failed or search refuted, 2 usage or parse
    error, 3 budget exceeded.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    _configure_logging(args.verbose)
    try:
        config = CliConfig(budgets=get_budgets(args.budgets), output_path=args.output,
                           strict=getattr(args, "strict", False), strict_format=args.strict_format,
                           output_format=getattr(args, "format", None) or "text")
        result = COMMANDS[args.command](args, config)
    except BudgetExceededError as e:
        logger.error(f"Budget exceeded: {e}")
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (PlanningError, ConstructionError) as e:
        logger.error(f"Construction failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    _write(result.text, config.output_path)
    return result.status
