import logging
from typing import Dict, List, Mapping, Optional, Set
import networkx as nx
from ..config import Budgets, get_budgets
from ..core.errors import BudgetExceededError
from ..core.models import Graph
from ..utils.tracing import get_tracer, record_graph

# Set up logging
logger = logging.getLogger(__name__)

# Set up tracing
tracer = get_tracer("outerplanar_oracle")


def _block_has_outer_cycle(block: List[int], adj: Mapping[int, Set[int]]) -> bool:
    """
    Search for a Hamiltonian cycle of a 2-connected block whose other edges
    are pairwise non-crossing chords.

    Vertices are placed along the cycle one at a time. Whenever the newly
    placed vertex closes a chord back to an earlier vertex a, every vertex
    strictly between them is enclosed and must already have all of its
    neighbors placed inside the chord's span; otherwise some chord would
    have to cross it later.
    """
    members = set(block)
    local = {v: adj[v] & members for v in block}
    size = len(block)
    if size <= 3:
        return True
    if sum(len(nbrs) for nbrs in local.values()) // 2 > 2 * size - 3:
        return False

    start = min(block)
    path: List[int] = [start]
    pos: Dict[int, int] = {start: 0}

    def enclosed_ok(k: int, w: int) -> bool:
        for a in local[w]:
            pa = pos.get(a)
            if pa is None or pa >= k - 1:
                continue
            for x in path[pa + 1:k]:
                for y in local[x]:
                    py = pos.get(y)
                    if py is None or py < pa:
                        return False
        return True

    def extend() -> bool:
        k = len(path)
        last = path[-1]
        if k == size:
            return start in local[last]
        for w in sorted(local[last].difference(pos)):
            pos[w] = k
            path.append(w)
            if enclosed_ok(k, w) and extend():
                return True
            path.pop()
            del pos[w]
        return False

    return extend()


def outerplanar_adjacency(adj: Mapping[int, Set[int]]) -> bool:
    """
    Decide outerplanarity of a graph given as an adjacency mapping.

    A graph is outerplanar iff each of its biconnected components is.
    """
    graph = nx.Graph()
    graph.add_nodes_from(adj)
    graph.add_edges_from((u, v) for u, nbrs in adj.items() for v in nbrs if u < v)
    for component in nx.biconnected_components(graph):
        if not _block_has_outer_cycle(sorted(component), adj):
            return False
    return True


def is_outerplanar_small(g: Graph, budgets: Optional[Budgets] = None) -> bool:
    """
    Exact outerplanarity test for desk-scale graphs.

    Args:
        g: The graph to test.
        budgets: Size caps; defaults to the configured budgets.

    Returns:
        True iff g admits a crossing-free drawing with all vertices on the outer face.
    """
    budgets = budgets or get_budgets()
    if g.n > budgets.oracle_max_n:
        raise BudgetExceededError(
            f"outerplanarity oracle accepts n <= {budgets.oracle_max_n}, got n={g.n}"
        )
    with tracer.start_as_current_span("is_outerplanar_small") as span:
        record_graph(span, g)
        adj = dict(enumerate(g.adjacency()))
        result = outerplanar_adjacency(adj)
        span.set_attribute("outerplanar", result)
        return result
