"""Independent oracles shared by the test modules.

Nothing here goes through ``Graph.degrees`` or the library's index code:
degrees come from a dense numpy adjacency matrix and products are rebuilt
with networkx.
"""

import math

import networkx as nx
import numpy as np
import pytest

from sombor_bounds import Graph


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=int)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


TERMS = {
    "eso": lambda a, b: (a + b) * math.sqrt(a * a + b * b),
    "eu": lambda a, b: math.sqrt(a * a + b * b + a * b),
    "so": lambda a, b: math.sqrt(a * a + b * b),
}


def matrix_index(g: Graph, name: str) -> float:
    """Brute-force index from the adjacency matrix, summed with fsum."""
    a = adjacency(g)
    deg = a.sum(axis=1)
    term = TERMS[name]
    return math.fsum(
        term(int(deg[i]), int(deg[j]))
        for i in range(g.n) for j in range(i + 1, g.n) if a[i, j]
    )


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph(h.number_of_nodes(), h.edges())


def nx_join(g1: Graph, g2: Graph) -> Graph:
    """Join via networkx's disjoint union plus every cross edge."""
    h = nx.disjoint_union(to_nx(g1), to_nx(g2))
    h.add_edges_from((u, g1.n + v) for u in range(g1.n) for v in range(g2.n))
    return from_nx(h)


def nx_corona(g1: Graph, g2: Graph) -> Graph:
    h = to_nx(g1)
    for i in range(g1.n):
        h = nx.disjoint_union(h, to_nx(g2))
        base = h.number_of_nodes() - g2.n
        h.add_edges_from((i, base + v) for v in range(g2.n))
    return from_nx(h)


def rel_close(x: float, y: float, rel: float = 1e-9) -> bool:
    return abs(x - y) <= rel * max(1.0, abs(x), abs(y))


@pytest.fixture
def small_graphs():
    from sombor_bounds import complete_graph, cycle_graph, path_graph
    return {
        "K1": complete_graph(1),
        "K2": complete_graph(2),
        "P3": path_graph(3),
        "C3": cycle_graph(3),
        "C4": cycle_graph(4),
        "K5": complete_graph(5),
    }
