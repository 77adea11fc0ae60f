"""
Elliptic Sombor and Euler Sombor indices of small graphs
=========================================================

Every index here is a sum over edges of a function of the two endpoint
degrees. We build a few familiar graphs and compare the three indices.
"""

import math

from sombor_bounds import complete_graph, cycle_graph, index_report, parse_graph6, path_graph

# A path on three vertices has two edges, each joining degrees 1 and 2,
# so ESO = 2 * 3 * sqrt(5).
p3 = path_graph(3)
r = index_report(p3)
print(f"P3: ESO={r.eso:.6f} (6*sqrt(5)={6 * math.sqrt(5):.6f}), EU={r.eu:.6f}, SO={r.so:.6f}")

# On an r-regular graph every edge looks the same.
for g, name in [(cycle_graph(6), "C6"), (complete_graph(5), "K5")]:
    r = index_report(g)
    d = r.max_deg
    print(f"{name}: ESO={r.eso:.4f} vs 2*sqrt(2)*m*r^2={2 * math.sqrt(2) * r.m * d * d:.4f}, "
          f"EU={r.eu:.4f} vs sqrt(3)*m*r={math.sqrt(3) * r.m * d:.4f}")

# Graphs can be read straight from graph6.
petersen = parse_graph6("IheA@GUAo")
print("Petersen graph:", index_report(petersen))
