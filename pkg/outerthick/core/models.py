from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Edge = Tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the pair {u, v} with the smaller label first."""
    return (u, v) if u < v else (v, u)


class Graph(BaseModel):
    """
    A simple undirected graph on the dense label space [n]_0.

    Edges are stored as canonical pairs (smaller label first), so two graphs
    with the same order and the same edge set compare equal.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Number of vertices; labels are exactly 0..n-1")
    edges: FrozenSet[Edge] = Field(default_factory=frozenset, description="Canonical edge pairs")

    @model_validator(mode="after")
    def _check_edges(self) -> "Graph":
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge ({u}, {v}) is not a canonical pair over [{self.n}]_0")
        return self

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def adjacency(self) -> List[Set[int]]:
        """
        Build the neighbor sets of every vertex.

        Returns:
            A list indexed by vertex label holding that vertex's neighbors.
        """
        adj: List[Set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Apply a permutation of [n]_0 to every edge."""
        return Graph(n=self.n, edges=frozenset(canonical_edge(mapping[u], mapping[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"<Graph(n={self.n}, m={self.m})>"


class Family(BaseModel):
    """
    An ordered family of edge sets over the shared vertex set [n]_0.

    Member order is an identity: index k always denotes the same member.
    `steps` optionally records the outer-cycle step d of each member.
    """
    model_config = ConfigDict(frozen=True)

    t: int = Field(..., ge=1, description="Number of members")
    n: int = Field(..., ge=1, description="Shared order of all members")
    members: Tuple[FrozenSet[Edge], ...] = Field(..., description="Edge sets E_0, ..., E_{t-1}")
    steps: Tuple[Optional[int], ...] = Field(default=(), description="Per-member outer-cycle step d, if known")

    @field_validator("steps")
    @classmethod
    def _collapse_unknown_steps(cls, steps: Tuple[Optional[int], ...]) -> Tuple[Optional[int], ...]:
        # no known step is stored as ()
        return steps if any(d is not None for d in steps) else ()

    @model_validator(mode="after")
    def _check_metadata(self) -> "Family":
        if self.t != len(self.members):
            raise ValueError(f"metadata t={self.t} but {len(self.members)} members given")
        if self.steps and len(self.steps) != self.t:
            raise ValueError(f"{len(self.steps)} step values for {self.t} members")
        for k, member in enumerate(self.members):
            for u, v in member:
                if not 0 <= u < v < self.n:
                    raise ValueError(f"member {k}: edge ({u}, {v}) is not a canonical pair over [{self.n}]_0")
        return self

    @classmethod
    def from_graphs(cls, graphs: Sequence[Graph], steps: Optional[Iterable[Optional[int]]] = None) -> "Family":
        if not graphs:
            raise ValueError("a family needs at least one member")
        n = graphs[0].n
        if any(g.n != n for g in graphs):
            raise ValueError("all members of a family must share the same order")
        return cls(
            t=len(graphs),
            n=n,
            members=tuple(g.edges for g in graphs),
            steps=tuple(steps) if steps is not None else (),
        )

    def member(self, k: int) -> Graph:
        return Graph(n=self.n, edges=self.members[k])

    def graphs(self) -> List[Graph]:
        return [self.member(k) for k in range(self.t)]

    def step(self, k: int) -> Optional[int]:
        return self.steps[k] if self.steps else None

    def select(self, indices: Sequence[int]) -> "Family":
        """
        Keep only the given members, in the given order.

        Args:
            indices: Member indices to keep.

        Returns:
            A new family with len(indices) members.
        """
        return Family(
            t=len(indices),
            n=self.n,
            members=tuple(self.members[k] for k in indices),
            steps=tuple(self.steps[k] for k in indices) if self.steps else (),
        )

    def __repr__(self) -> str:
        return f"<Family(t={self.t}, n={self.n})>"
