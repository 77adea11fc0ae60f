import itertools

import pytest

from sombor_bounds import (
    Graph,
    GraphError,
    complete_graph,
    corona,
    cycle_graph,
    empty_graph,
    join,
    path_graph,
)
from sombor_bounds.products import ProductLayout, layout, product
from sombor_bounds.verify import enumerate_graphs

from conftest import nx_corona, nx_join

K1, K2, K3 = complete_graph(1), complete_graph(2), complete_graph(3)


def test_join_examples():
    assert join(K1, K1) == K2
    assert join(K2, K1) == K3
    j = join(cycle_graph(4), cycle_graph(4))
    assert j.n == 8 and j.m == 24
    assert set(j.degrees) == {6}


def test_corona_examples():
    assert corona(K1, K1) == K2
    assert corona(K1, K2) == K3
    net = corona(K3, K1)
    assert net.m == 6
    assert sorted(net.degrees) == [1, 1, 1, 3, 3, 3]
    # pendant of vertex i is vertex 3 + i
    assert net == Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def test_empty_operand_rejected():
    with pytest.raises(GraphError):
        join(Graph(0), K1)
    with pytest.raises(GraphError):
        corona(K1, Graph(0))


def test_layout_numbering():
    g1, g2 = path_graph(3), K2
    c = corona(g1, g2)
    lay = layout("corona", g1, g2)
    assert lay.order == c.n == 9
    for i in range(3):
        for v in range(2):
            assert c.adjacent(i, lay.second_factor_vertex(v, copy=i))
            for j in range(3):
                if j != i:
                    assert not c.adjacent(j, lay.second_factor_vertex(v, copy=i))
    jl = layout("join", g1, g2)
    assert jl.second_factor_vertex(1) == 4


def test_product_dispatch():
    assert product("join", K2, K1) == K3
    with pytest.raises(ValueError):
        product("tensor", K2, K1)


def _all_up_to(n):
    return [g for k in range(1, n + 1) for g in enumerate_graphs(k)]


@pytest.mark.parametrize("kind", ["join", "corona"])
def test_degree_and_size_laws_up_to_order_3(kind):
    graphs = _all_up_to(3)
    for g1, g2 in itertools.product(graphs, repeat=2):
        p = product(kind, g1, g2)
        lay = ProductLayout(kind, g1.n, g2.n)
        assert p.n == lay.order
        assert p.m == lay.size(g1.m, g2.m)
        for w in range(p.n):
            assert p.degree(w) == lay.expected_degree(g1, g2, w)


def test_products_match_networkx_construction():
    graphs = _all_up_to(3)
    for g1, g2 in itertools.product(graphs, repeat=2):
        assert join(g1, g2) == nx_join(g1, g2)
        assert corona(g1, g2) == nx_corona(g1, g2)


def test_join_commutes_up_to_degree_multiset():
    graphs = _all_up_to(3)
    for g1, g2 in itertools.product(graphs, repeat=2):
        a, b = join(g1, g2), join(g2, g1)
        assert (a.n, a.m, sorted(a.degrees)) == (b.n, b.m, sorted(b.degrees))


def test_corona_does_not_commute():
    graphs = _all_up_to(3)
    for g1, g2 in itertools.product(graphs, repeat=2):
        if g1.n * (1 + g2.n) != g2.n * (1 + g1.n):
            assert corona(g1, g2).n != corona(g2, g1).n
    assert corona(K2, empty_graph(1)).n == 4
    assert corona(empty_graph(1), K2).n == 3
