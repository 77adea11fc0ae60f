"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input (bad vertex, self-loop, empty graph)."""


class Graph:
    """A simple undirected graph with dense integer vertices.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``; neighbour sets
    are frozensets so adjacency queries are O(1). Instances are immutable and
    hashable, and two graphs compare equal iff they have the same order and the
    same edge set.
    """

    __slots__ = ("_n", "_edges", "_adj", "_deg")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
        canon = set()
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {pair!r} has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge {pair!r} is a self-loop")
            canon.add((u, v) if u < v else (v, u))
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in canon:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = n
        self._edges = tuple(sorted(canon))
        self._adj = tuple(frozenset(s) for s in nbrs)
        self._deg = tuple(len(s) for s in nbrs)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return self._edges

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self._deg

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def neighbors(self, u: int) -> frozenset:
        self._check_vertex(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self._deg[u]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``u`` renamed to ``perm[u]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self._edges))

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self._n:
            raise GraphError(f"vertex {u!r} outside 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"


@dataclass(frozen=True)
class GraphParams:
    """Order, size and degree extremes of a graph.

    ``regular_deg`` is set exactly when ``max_deg == min_deg``.
    """

    n: int
    m: int
    max_deg: int
    min_deg: int
    regular_deg: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("parameters need order n >= 1")
        if not 0 <= self.min_deg <= self.max_deg <= self.n - 1:
            raise GraphError(
                f"need 0 <= min_deg <= max_deg <= n-1, got "
                f"min_deg={self.min_deg}, max_deg={self.max_deg}, n={self.n}"
            )
        if not 0 <= self.m <= self.n * (self.n - 1) // 2:
            raise GraphError(f"size m={self.m} impossible for order n={self.n}")
        if self.regular_deg is None:
            if self.max_deg == self.min_deg:
                object.__setattr__(self, "regular_deg", self.max_deg)
        elif self.regular_deg != self.max_deg or self.max_deg != self.min_deg:
            raise GraphError("regular_deg requires max_deg == min_deg == regular_deg")
        if self.regular_deg is not None and 2 * self.m != self.n * self.regular_deg:
            raise GraphError(
                f"an r-regular graph has 2m = n*r; got m={self.m}, n={self.n}, r={self.regular_deg}"
            )

    @property
    def is_regular(self) -> bool:
        return self.regular_deg is not None

    @classmethod
    def regular(cls, n: int, r: int) -> "GraphParams":
        """Parameters of an ``r``-regular graph of order ``n``."""
        if (n * r) % 2:
            raise GraphError(f"no {r}-regular graph on {n} vertices (n*r is odd)")
        return cls(n=n, m=n * r // 2, max_deg=r, min_deg=r)


def build_graph(n: int, edges: Iterable[Edge] = ()) -> Graph:
    """Build a graph, collapsing duplicate edges. Rejects self-loops and bad vertices."""
    return Graph(n, edges)


def degree(g: Graph, u: int) -> int:
    return g.degree(u)


def params_of(g: Graph) -> GraphParams:
    if g.n == 0:
        raise GraphError("params_of is undefined on the empty graph (n = 0)")
    degs = g.degrees
    return GraphParams(n=g.n, m=g.m, max_deg=max(degs), min_deg=min(degs))


# Small named graphs used throughout tests and demos.

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def circulant_graph(n: int, jumps: Iterable[int]) -> Graph:
    """Circulant graph: ``i ~ i +/- j (mod n)`` for every jump ``j``."""
    edges = []
    for j in jumps:
        if not 1 <= j <= n // 2:
            raise GraphError(f"jump {j} outside 1..{n // 2}")
        edges.extend((i, (i + j) % n) for i in range(n))
    return Graph(n, edges)
