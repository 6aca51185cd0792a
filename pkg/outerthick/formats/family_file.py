"""
Plain-text family format.

    family <t> <n>
    graph <k> [d=<d>]
    <u> <v>
    ...

Edges are written with u < v, sorted lexicographically, members in index
order. `#` starts a comment and blank lines are ignored. A trailing newline
is required.
"""
import logging
from typing import Dict, List, Optional, Set, Tuple
from ..core.errors import FamilyFormatError
from ..core.models import Edge, Family

# Set up logging
logger = logging.getLogger(__name__)


def emit_family(f: Family) -> str:
    """
    Serialize a family; the output is a pure function of f.

    Args:
        f: The family to write.

    Returns:
        The text document, ending in a newline.
    """
    lines = [f"family {f.t} {f.n}"]
    for k, member in enumerate(f.members):
        d = f.step(k)
        lines.append(f"graph {k}" if d is None else f"graph {k} d={d}")
        lines.extend(f"{u} {v}" for u, v in sorted(member))
    return "\n".join(lines) + "\n"


def _int(token: str, line_number: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FamilyFormatError(f"{what} must be an integer, got {token!r}", line_number) from None
    if value < 0 or token != str(value):
        raise FamilyFormatError(f"{what} must be a non-negative decimal integer, got {token!r}", line_number)
    return value


def parse_family(text: str, strict: bool = False) -> Family:
    """
    Parse the family format.

    Args:
        text: The document.
        strict: Reject edges written as `v u` with v > u and edges out of
            lexicographic order; otherwise such edges are normalized.

    Returns:
        The parsed family. Any malformed line raises FamilyFormatError
        carrying its line number.
    """
    if not text.endswith("\n"):
        raise FamilyFormatError("missing trailing newline")

    header: Optional[Tuple[int, int]] = None
    members: List[Set[Edge]] = []
    steps: List[Optional[int]] = []
    last_edge: Dict[int, Edge] = {}

    for line_number, raw in enumerate(text.split("\n")[:-1], start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()

        if header is None:
            if fields[0] != "family" or len(fields) != 3:
                raise FamilyFormatError(f"expected 'family <t> <n>', got {line!r}", line_number)
            t = _int(fields[1], line_number, "t")
            n = _int(fields[2], line_number, "n")
            if t < 1 or n < 1:
                raise FamilyFormatError(f"t and n must be positive, got t={t}, n={n}", line_number)
            header = (t, n)
            continue

        t, n = header
        if fields[0] == "graph":
            if len(fields) not in (2, 3):
                raise FamilyFormatError(f"expected 'graph <k> [d=<d>]', got {line!r}", line_number)
            k = _int(fields[1], line_number, "member index")
            if k != len(members):
                raise FamilyFormatError(f"expected member {len(members)}, got member {k}", line_number)
            if k >= t:
                raise FamilyFormatError(f"member {k} exceeds the declared t={t}", line_number)
            d = None
            if len(fields) == 3:
                if not fields[2].startswith("d="):
                    raise FamilyFormatError(f"expected 'd=<d>', got {fields[2]!r}", line_number)
                d = _int(fields[2][2:], line_number, "step d")
            members.append(set())
            steps.append(d)
            continue

        if fields[0] == "family":
            raise FamilyFormatError("duplicate family header", line_number)
        if not members:
            raise FamilyFormatError("edge line before the first 'graph' line", line_number)
        if len(fields) != 2:
            raise FamilyFormatError(f"expected '<u> <v>', got {line!r}", line_number)

        u = _int(fields[0], line_number, "vertex label")
        v = _int(fields[1], line_number, "vertex label")
        if u == v:
            raise FamilyFormatError(f"self-loop at vertex {u}", line_number)
        if u >= n or v >= n:
            raise FamilyFormatError(f"label {max(u, v)} outside [{n}]_0", line_number)
        if u > v:
            if strict:
                raise FamilyFormatError(f"edge '{u} {v}' is not written smaller label first", line_number)
            logger.debug(f"line {line_number}: normalizing edge '{u} {v}'")
            u, v = v, u

        k = len(members) - 1
        edge = (u, v)
        if edge in members[k]:
            raise FamilyFormatError(f"duplicate edge {edge} in member {k}", line_number)
        if strict and k in last_edge and edge < last_edge[k]:
            raise FamilyFormatError(f"edge {edge} is out of lexicographic order", line_number)
        last_edge[k] = edge
        members[k].add(edge)

    if header is None:
        raise FamilyFormatError("missing 'family <t> <n>' header")
    t, n = header
    if len(members) != t:
        raise FamilyFormatError(f"header declares t={t} but {len(members)} members were given")

    return Family(
        t=t,
        n=n,
        members=tuple(frozenset(m) for m in members),
        steps=tuple(steps) if any(d is not None for d in steps) else (),
    )


def read_family(path: str, strict: bool = False) -> Family:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_family(handle.read(), strict=strict)
