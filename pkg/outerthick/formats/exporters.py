import logging
import math
from typing import List, Optional, Sequence
import networkx as nx
from ..bounds.coloring import to_networkx
from ..certify.mop import MopCertificate
from ..core.errors import InvalidOrderError
from ..core.models import Family, Graph

# Set up logging
logger = logging.getLogger(__name__)

GRAPH6_MAX_N = 258047


def emit_graph6(g: Graph) -> str:
    """
    Encode g in graph6 with networkx, vertices in label order.

    Returns:
        The encoding without header or newline.
    """
    if g.n > GRAPH6_MAX_N:
        raise InvalidOrderError(f"graph6 supports n <= {GRAPH6_MAX_N}, got n={g.n}")
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").rstrip("\n")


def emit_edgelist(g: Graph) -> str:
    """One `u v` line per edge, sorted, with a trailing newline when non-empty."""
    return "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


def _coordinate(value: float) -> str:
    return f"{round(value, 3) + 0.0:.3f}"


def _dot_body(g: Graph, certificate: Optional[MopCertificate], indent: str = "    ") -> List[str]:
    lines = [f"{indent}node [shape=circle];"]
    if certificate is not None:
        radius = max(1.5, g.n / 4)
        for p, v in enumerate(certificate.cycle):
            angle = math.pi / 2 - 2 * math.pi * p / g.n
            x, y = radius * math.cos(angle), radius * math.sin(angle)
            lines.append(f'{indent}{v} [pos="{_coordinate(x)},{_coordinate(y)}!"];')
    else:
        lines.extend(f"{indent}{v};" for v in range(g.n))
    lines.extend(f"{indent}{u} -- {v};" for u, v in g.sorted_edges())
    return lines


def emit_dot(g: Graph, certificate: Optional[MopCertificate] = None, name: str = "G") -> str:
    """
    Emit an undirected DOT graph.

    With a certificate, vertices get pinned positions on a circle in
    outer-cycle order, starting at the top and running clockwise; render
    with `neato -n`. Without one, layout is left to circo.
    """
    layout = "neato" if certificate is not None else "circo"
    lines = [f"graph {name} {{", f"    layout={layout};"]
    lines.extend(_dot_body(g, certificate))
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_family_dot(
    f: Family,
    certificates: Sequence[Optional[MopCertificate]],
    order: Optional[Sequence[int]] = None,
) -> str:
    """One DOT graph per member, in the given display order."""
    order = list(order) if order is not None else list(range(f.t))
    return "".join(emit_dot(f.member(k), certificates[k], name=f"member_{k}") for k in order)
