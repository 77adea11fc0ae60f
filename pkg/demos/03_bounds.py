"""
Bounds from factor parameters
=============================

Each bound only needs order, size and a degree extreme of each factor.
For regular factors lower and upper bound meet the true value.
"""

from sombor_bounds import (
    KINDS,
    bound_pair,
    complete_graph,
    cycle_graph,
    eso,
    eu,
    params_of,
    path_graph,
    printed_proposition,
    product,
    regular_exact,
)


def true_index(kind, g1, g2):
    name, op = kind.split("-")
    return (eso if name == "eso" else eu)(product(op, g1, g2))


pairs = [(path_graph(4), complete_graph(2)), (cycle_graph(4), cycle_graph(5))]
for g1, g2 in pairs:
    p1, p2 = params_of(g1), params_of(g2)
    for kind in KINDS:
        bp = bound_pair(kind, p1, p2)
        print(f"{kind:11s} n1={p1.n} n2={p2.n}: {bp.alpha1:10.3f} <= {true_index(kind, g1, g2):10.3f} <= {bp.alpha2:10.3f}")
    print()

# Regular factors: exact values, and how the originally printed ESO
# formulas (missing the root in the cross term) compare.
p1, p2 = params_of(cycle_graph(4)), params_of(cycle_graph(4))
for kind in KINDS:
    print(f"{kind:11s} exact={regular_exact(kind, p1, p2):10.4f} printed={printed_proposition(kind, p1, p2):10.4f}")

# The printed EU-join statement borrows corona shifts and undercuts K2 + K2 = K4.
k2 = params_of(complete_graph(2))
bad = bound_pair("eu-join", k2, k2, "statement")
print(f"\nEU(K4)={eu(product('join', complete_graph(2), complete_graph(2))):.4f}, "
      f"statement upper bound={bad.alpha2:.4f}")
