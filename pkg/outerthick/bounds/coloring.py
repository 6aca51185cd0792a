import logging
from typing import List, Optional
import networkx as nx
from ..config import Budgets, get_budgets
from ..core.errors import BudgetExceededError
from ..core.models import Graph
from ..utils.tracing import get_tracer, record_graph

# Set up logging
logger = logging.getLogger(__name__)

# Set up tracing
tracer = get_tracer("coloring")


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.sorted_edges())
    return graph


def clique_lower_bound(g: Graph) -> int:
    """Size of a largest clique, found by enumerating maximal cliques."""
    return max((len(c) for c in nx.find_cliques(to_networkx(g))), default=1)


def dsatur_upper_bound(g: Graph) -> int:
    coloring = nx.coloring.greedy_color(to_networkx(g), strategy="DSATUR")
    return max(coloring.values(), default=0) + 1


def find_k_coloring(g: Graph, k: int) -> Optional[List[int]]:
    """
    Backtracking search for a proper coloring with at most k colors.

    The next vertex is the uncolored one with the most distinct neighbor
    colors (ties: higher degree, then smaller label). A new color is only
    opened as the next unused one.

    Returns:
        coloring[v] for every vertex, or None if g is not k-colorable.
    """
    if k <= 0:
        raise ValueError("k should be greater than 0")
    adj = g.adjacency()
    coloring = [-1] * g.n

    def pick() -> int:
        best, best_key = -1, None
        for v in range(g.n):
            if coloring[v] != -1:
                continue
            saturation = len({coloring[u] for u in adj[v] if coloring[u] != -1})
            key = (saturation, len(adj[v]), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def rec(colored: int, used: int) -> bool:
        if colored == g.n:
            return True
        v = pick()
        forbidden = {coloring[u] for u in adj[v]}
        for color in range(min(used + 1, k)):
            if color in forbidden:
                continue
            coloring[v] = color
            if rec(colored + 1, max(used, color + 1)):
                return True
        coloring[v] = -1
        return False

    return coloring if rec(0, 0) else None


def chromatic_number_exact(g: Graph, budgets: Optional[Budgets] = None) -> int:
    """
    Exact chromatic number of a desk-scale graph.

    Args:
        g: The graph; n must not exceed the color_max_n budget.
        budgets: Size caps; defaults to the configured budgets.

    Returns:
        The smallest k admitting a proper k-coloring.
    """
    budgets = budgets or get_budgets()
    if g.n > budgets.color_max_n:
        raise BudgetExceededError(f"exact coloring accepts n <= {budgets.color_max_n}, got n={g.n}")

    with tracer.start_as_current_span("chromatic_number_exact") as span:
        record_graph(span, g)

        lower = clique_lower_bound(g)
        upper = dsatur_upper_bound(g)
        logger.debug(f"Chromatic bounds for {g!r}: clique {lower}, DSATUR {upper}")

        chi = upper
        for k in range(lower, upper):
            if find_k_coloring(g, k) is not None:
                chi = k
                break

        span.set_attribute("chromatic_number", chi)
        logger.info(f"Chromatic number of {g!r} is {chi}")
        return chi
