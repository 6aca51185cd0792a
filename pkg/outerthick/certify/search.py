import logging
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple
from pydantic import BaseModel, Field
from ..config import Budgets, get_budgets
from ..core.errors import BudgetExceededError, ConstructionError
from ..core.models import Edge, Graph
from ..utils.tracing import get_tracer, record, record_graph
from .outerplanar import is_outerplanar_small, outerplanar_adjacency

# Set up logging
logger = logging.getLogger(__name__)

# Set up tracing
tracer = get_tracer("outerthickness_search")


class SearchVerdict(str, Enum):
    FOUND = "found"
    REFUTED = "refuted"
    BUDGET_EXCEEDED = "budget_exceeded"


class SearchResult(BaseModel):
    """Outcome of an exhaustive decomposition search."""
    verdict: SearchVerdict
    k: int = Field(..., ge=1, description="Number of parts asked for")
    parts: Optional[Tuple[Tuple[Edge, ...], ...]] = Field(
        default=None, description="Edge sets of the decomposition, when found"
    )
    explored_nodes: int = Field(default=0, description="Search nodes visited, for reproducibility")

    @property
    def found(self) -> bool:
        return self.verdict == SearchVerdict.FOUND


class _NodeCapReached(Exception):
    pass


def search_order(g: Graph) -> List[Edge]:
    """
    Edge order used by the search: by larger endpoint, then smaller.

    This completes K_2, K_3, K_4, ... on the first vertices as early as
    possible, which is where dense prefixes get refuted.
    """
    return sorted(g.edges, key=lambda e: (e[1], e[0]))


class OuterthicknessSearch:
    """
    Exhaustive search for a partition of E(g) into k outerplanar parts.

    Edges are colored in search_order; colors are tried in ascending order
    and a new color is only opened as the next unused one, which also fixes
    the first edge's color to 0.
    """

    def __init__(self, g: Graph, k: int, node_cap: int):
        self.g = g
        self.k = k
        self.node_cap = node_cap
        self.edges = search_order(g)
        self.capacity = max(2 * g.n - 3, 1)
        self.nodes = 0
        self.cache: Dict[int, bool] = {}
        self.masks = [0] * k
        self.counts = [0] * k
        self.adj: List[Dict[int, Set[int]]] = [{v: set() for v in range(g.n)} for _ in range(k)]
        self.coloring: List[int] = [-1] * len(self.edges)

    def _connected(self, c: int, u: int, v: int) -> bool:
        adj = self.adj[c]
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                return True
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def _stays_outerplanar(self, c: int, i: int) -> bool:
        u, v = self.edges[i]
        # Joining two components cannot create a forbidden block.
        if not self._connected(c, u, v):
            return True
        mask = self.masks[c] | (1 << i)
        cached = self.cache.get(mask)
        if cached is not None:
            return cached
        adj = self.adj[c]
        adj[u].add(v)
        adj[v].add(u)
        result = outerplanar_adjacency(adj)
        adj[u].discard(v)
        adj[v].discard(u)
        self.cache[mask] = result
        return result

    def _assign(self, c: int, i: int) -> None:
        u, v = self.edges[i]
        self.adj[c][u].add(v)
        self.adj[c][v].add(u)
        self.masks[c] |= 1 << i
        self.counts[c] += 1
        self.coloring[i] = c

    def _unassign(self, c: int, i: int) -> None:
        u, v = self.edges[i]
        self.adj[c][u].discard(v)
        self.adj[c][v].discard(u)
        self.masks[c] &= ~(1 << i)
        self.counts[c] -= 1
        self.coloring[i] = -1

    def _dfs(self, i: int, used: int) -> bool:
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise _NodeCapReached()
        if i == len(self.edges):
            return True
        remaining = len(self.edges) - i
        for c in range(min(self.k, used + 1)):
            if self.counts[c] >= self.capacity:
                continue
            if not self._stays_outerplanar(c, i):
                continue
            self._assign(c, i)
            slack = sum(self.capacity - count for count in self.counts)
            if slack >= remaining - 1 and self._dfs(i + 1, max(used, c + 1)):
                return True
            self._unassign(c, i)
        return False

    def run(self) -> SearchResult:
        try:
            found = self._dfs(0, 0)
        except _NodeCapReached:
            return SearchResult(verdict=SearchVerdict.BUDGET_EXCEEDED, k=self.k, explored_nodes=self.nodes)

        if not found:
            return SearchResult(verdict=SearchVerdict.REFUTED, k=self.k, explored_nodes=self.nodes)

        parts = tuple(
            tuple(sorted(e for e, c in zip(self.edges, self.coloring) if c == part))
            for part in range(self.k)
        )
        return SearchResult(verdict=SearchVerdict.FOUND, k=self.k, parts=parts, explored_nodes=self.nodes)


def outerthickness_exact(
    g: Graph,
    k: int,
    budgets: Optional[Budgets] = None,
    node_cap: Optional[int] = None,
) -> SearchResult:
    """
    Decide whether E(g) splits into k outerplanar graphs.

    Args:
        g: The graph; must fit the search budget (n and m caps).
        k: Number of parts.
        budgets: Size caps; defaults to the configured budgets.
        node_cap: Overrides the configured node cap.

    Returns:
        A decomposition, an exhaustive refutation, or a budget-exceeded
        verdict, each with the number of explored nodes.
    """
    budgets = budgets or get_budgets()
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if g.n > budgets.search_max_n or g.m > budgets.search_max_m:
        raise BudgetExceededError(
            f"exhaustive search accepts n <= {budgets.search_max_n} and m <= {budgets.search_max_m}, "
            f"got n={g.n}, m={g.m}"
        )

    with tracer.start_as_current_span("outerthickness_exact") as span:
        record_graph(span, g, k=k)

        search = OuterthicknessSearch(g, k, node_cap or budgets.search_node_cap)
        result = search.run()

        record(span, verdict=result.verdict, explored_nodes=result.explored_nodes)
        logger.info(f"Outerthickness search k={k} on n={g.n}, m={g.m}: "
                    f"{result.verdict.value} after {result.explored_nodes} nodes")

        if result.found:
            covered = [e for part in result.parts for e in part]
            if len(covered) != g.m or set(covered) != set(g.edges):
                raise ConstructionError("search returned parts that do not partition E(g)")
            for part in result.parts:
                if not is_outerplanar_small(Graph(n=g.n, edges=frozenset(part)), budgets):
                    raise ConstructionError(f"search returned a non-outerplanar part {part}")
        return result
