"""Join and corona products with a fixed vertex numbering.

Join ``G1 + G2``: ``V1 -> 0..n1-1``, ``V2 -> n1..n1+n2-1``.
Corona ``G1 o G2``: ``V1 -> 0..n1-1``, copy ``i`` of ``G2`` occupies
``n1 + i*n2 .. n1 + (i+1)*n2 - 1`` and is attached to vertex ``i`` of ``G1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graph import Graph, GraphError

ProductKind = Literal["join", "corona"]


@dataclass(frozen=True)
class ProductLayout:
    kind: ProductKind
    n1: int
    n2: int

    @property
    def order(self) -> int:
        if self.kind == "join":
            return self.n1 + self.n2
        return self.n1 * (1 + self.n2)

    def size(self, m1: int, m2: int) -> int:
        if self.kind == "join":
            return m1 + m2 + self.n1 * self.n2
        return m1 + self.n1 * m2 + self.n1 * self.n2

    def first_factor_vertex(self, u: int) -> int:
        return u

    def second_factor_vertex(self, v: int, copy: int = 0) -> int:
        """Product vertex of ``v`` in G2 (for corona, inside copy ``copy``)."""
        if self.kind == "join":
            return self.n1 + v
        return self.n1 + copy * self.n2 + v

    def expected_degree(self, g1: Graph, g2: Graph, w: int) -> int:
        """Degree of product vertex ``w`` predicted from the factor degrees."""
        if w < self.n1:
            return g1.degree(w) + self.n2
        v = (w - self.n1) % self.n2
        shift = self.n1 if self.kind == "join" else 1
        return g2.degree(v) + shift


def _check_operands(g1: Graph, g2: Graph) -> None:
    if g1.n < 1 or g2.n < 1:
        raise GraphError("product operands must have at least one vertex")


def join(g1: Graph, g2: Graph) -> Graph:
    _check_operands(g1, g2)
    n1, n2 = g1.n, g2.n
    edges = list(g1.edges)
    edges.extend((n1 + u, n1 + v) for u, v in g2.edges)
    edges.extend((u, n1 + v) for u in range(n1) for v in range(n2))
    return Graph(n1 + n2, edges)


def corona(g1: Graph, g2: Graph) -> Graph:
    """Corona product: one copy of ``g2`` per vertex of ``g1``, each copy fully
    joined to its vertex."""
    _check_operands(g1, g2)
    n1, n2 = g1.n, g2.n
    edges = list(g1.edges)
    for i in range(n1):
        base = n1 + i * n2
        edges.extend((base + u, base + v) for u, v in g2.edges)
        edges.extend((i, base + v) for v in range(n2))
    return Graph(n1 * (1 + n2), edges)


def product(kind: ProductKind, g1: Graph, g2: Graph) -> Graph:
    if kind == "join":
        return join(g1, g2)
    if kind == "corona":
        return corona(g1, g2)
    raise ValueError(f"unknown product kind {kind!r}")


def layout(kind: ProductKind, g1: Graph, g2: Graph) -> ProductLayout:
    return ProductLayout(kind, g1.n, g2.n)
