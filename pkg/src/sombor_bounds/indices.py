"""Degree-based edge-sum indices: elliptic Sombor, Euler Sombor and Sombor."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .graph import Graph, GraphError

EdgeTerm = Callable[[int, int], float]


def eso_term(a: int, b: int) -> float:
    return (a + b) * math.sqrt(a * a + b * b)


def eu_term(a: int, b: int) -> float:
    return math.sqrt(a * a + b * b + a * b)


def sombor_term(a: int, b: int) -> float:
    return math.sqrt(a * a + b * b)


def edge_sum(g: Graph, term: EdgeTerm) -> float:
    """Sum ``term(d(u), d(v))`` over edges in lexicographic order."""
    if g.n == 0:
        raise GraphError("indices are undefined on the empty graph (n = 0)")
    deg = g.degrees
    total = 0.0
    for u, v in g.edges:
        total += term(deg[u], deg[v])
    return total


def eso(g: Graph) -> float:
    """Elliptic Sombor index: sum of ``(d(u)+d(v)) * sqrt(d(u)^2 + d(v)^2)``."""
    return edge_sum(g, eso_term)


def eu(g: Graph) -> float:
    """Euler Sombor index: sum of ``sqrt(d(u)^2 + d(v)^2 + d(u) d(v))``."""
    return edge_sum(g, eu_term)


def sombor(g: Graph) -> float:
    return edge_sum(g, sombor_term)


@dataclass(frozen=True)
class IndexReport:
    eso: float
    eu: float
    so: float
    m: int
    max_deg: int
    min_deg: int


def index_report(g: Graph) -> IndexReport:
    if g.n == 0:
        raise GraphError("indices are undefined on the empty graph (n = 0)")
    return IndexReport(
        eso=eso(g),
        eu=eu(g),
        so=sombor(g),
        m=g.m,
        max_deg=max(g.degrees),
        min_deg=min(g.degrees),
    )
