"""Elliptic Sombor and Euler Sombor indices of join and corona products.

Graphs are immutable simple graphs on ``0..n-1``; products use a fixed vertex
numbering; bounds come from factor parameters alone and are checked by
brute force in :mod:`sombor_bounds.verify`.
"""

from .bounds import (
    KINDS,
    VARIANTS,
    BoundPair,
    bound_pair,
    eso_corona_bounds,
    eso_join_bounds,
    eu_corona_bounds,
    eu_join_bounds,
    printed_proposition,
    regular_exact,
)
from .graph import (
    Graph,
    GraphError,
    GraphParams,
    build_graph,
    circulant_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree,
    empty_graph,
    params_of,
    path_graph,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .indices import IndexReport, eso, eu, index_report, sombor
from .products import ProductLayout, corona, join, product
from .verify import (
    SweepConfig,
    VerificationRecord,
    enumerate_graphs,
    random_graph,
    run_sweep,
    verify_pair,
)

__version__ = "0.1.0"
