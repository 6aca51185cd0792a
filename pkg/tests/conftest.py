import random
from typing import List
import pytest
from outerthick.core.models import Graph, canonical_edge


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive searches that take noticeably longer")


@pytest.fixture
def diamond() -> Graph:
    return Graph(n=4, edges=frozenset({(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)}))


def random_mop(n: int, rng: random.Random) -> Graph:
    """Grow a maximal outerplanar graph by stacking triangles on random outer edges, then relabel."""
    cycle: List[int] = [0, 1, 2]
    edges = {(0, 1), (1, 2), (0, 2)}
    for x in range(3, n):
        p = rng.randrange(len(cycle))
        u, v = cycle[p], cycle[(p + 1) % len(cycle)]
        edges.update({canonical_edge(u, x), canonical_edge(v, x)})
        cycle.insert(p + 1, x)
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n=n, edges=frozenset(canonical_edge(perm[u], perm[v]) for u, v in edges))
