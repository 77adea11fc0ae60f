"""
Join and corona products
========================

The join adds every edge between two graphs; the corona hangs a copy of the
second graph off every vertex of the first. Both shift degrees in a simple
way, which is what makes closed-form bounds possible.
"""

from sombor_bounds import complete_graph, corona, cycle_graph, join, path_graph, write_graph6

c3, k1, k2 = cycle_graph(3), complete_graph(1), complete_graph(2)

net = corona(c3, k1)
print("C3 o K1 (the net):", write_graph6(net), "degrees", net.degrees)

# Vertex numbering is fixed: the first factor keeps 0..n1-1, copies follow.
c = corona(path_graph(3), k2)
for i in range(3):
    copy = [3 + 2 * i, 3 + 2 * i + 1]
    print(f"vertex {i} (degree {c.degree(i)}) is attached to copy {copy}")

j = join(cycle_graph(4), cycle_graph(4))
print(f"C4 + C4: n={j.n}, m={j.m}, degrees={set(j.degrees)}")

# Corona is not commutative: orders differ.
print("order of P3 o K2:", corona(path_graph(3), k2).n, " order of K2 o P3:", corona(k2, path_graph(3)).n)
