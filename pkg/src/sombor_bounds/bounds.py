"""Closed-form lower/upper bounds for ESO and EU of join and corona products.

Each bound is a function of the factor parameters only (order, size and a
degree extreme). Substituting the maximum degrees gives the upper bound
``alpha2``; substituting the minimum degrees gives the lower bound ``alpha1``.
When both factors are regular the two coincide and equal the index exactly.

Formula variants
----------------
``proof-conclusion`` (default) is the internally consistent formula for every
kind. ``statement`` differs only for ``eu-join``: there the originally printed
theorem uses corona-style shifts ``n1*m2*(D2+1)`` and ``(D2+1)`` inside the
cross term, which can under-estimate the join. It is kept so sweeps can look
for counterexamples against it. For the other kinds both tags evaluate the
same expression.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Literal, Tuple

from .graph import GraphParams

Kind = Literal["eso-join", "eu-join", "eso-corona", "eu-corona"]
Variant = Literal["proof-conclusion", "statement"]

KINDS: Tuple[str, ...] = ("eso-join", "eu-join", "eso-corona", "eu-corona")
VARIANTS: Tuple[str, ...] = ("proof-conclusion", "statement")
CORRECTED = "proof-conclusion"

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class BoundPair:
    alpha1: float
    alpha2: float
    theorem: str
    formula_variant: str = CORRECTED

    def brackets(self, value: float, rel_tol: float = 1e-9, abs_tol: float = 1e-12) -> bool:
        tol = max(rel_tol * max(abs(value), abs(self.alpha1), abs(self.alpha2)), abs_tol)
        return self.alpha1 <= value + tol and value <= self.alpha2 + tol


# Each evaluator takes (n1, m1, d1, n2, m2, d2) where d1, d2 are the chosen
# degree extremes (both maxima or both minima).

def _eso_join(n1: int, m1: int, d1: int, n2: int, m2: int, d2: int) -> float:
    a = d1 + n2
    b = d2 + n1
    return (
        2 * SQRT2 * m1 * a * a
        + 2 * SQRT2 * m2 * b * b
        + n1 * n2 * (a + b) * math.sqrt(a * a + b * b)
    )


def _eu_join(n1: int, m1: int, d1: int, n2: int, m2: int, d2: int) -> float:
    a = d1 + n2
    b = d2 + n1
    return SQRT3 * m1 * a + SQRT3 * m2 * b + n1 * n2 * math.sqrt(a * a + b * b + a * b)


def _eu_join_statement(n1: int, m1: int, d1: int, n2: int, m2: int, d2: int) -> float:
    a = d1 + n2
    c = d2 + 1
    return SQRT3 * m1 * a + SQRT3 * n1 * m2 * c + n1 * n2 * math.sqrt(a * a + c * c + a * c)


def _eso_corona(n1: int, m1: int, d1: int, n2: int, m2: int, d2: int) -> float:
    a = d1 + n2
    c = d2 + 1
    return (
        2 * SQRT2 * m1 * a * a
        + 2 * SQRT2 * n1 * m2 * c * c
        + n1 * n2 * (a + c) * math.sqrt(a * a + c * c)
    )


def _eu_corona(n1: int, m1: int, d1: int, n2: int, m2: int, d2: int) -> float:
    a = d1 + n2
    c = d2 + 1
    return SQRT3 * m1 * a + SQRT3 * n1 * m2 * c + n1 * n2 * math.sqrt(a * a + c * c + a * c)


_Formula = Callable[[int, int, int, int, int, int], float]

_FORMULAS: Dict[Tuple[str, str], _Formula] = {
    ("eso-join", "proof-conclusion"): _eso_join,
    ("eso-join", "statement"): _eso_join,
    ("eu-join", "proof-conclusion"): _eu_join,
    ("eu-join", "statement"): _eu_join_statement,
    ("eso-corona", "proof-conclusion"): _eso_corona,
    ("eso-corona", "statement"): _eso_corona,
    ("eu-corona", "proof-conclusion"): _eu_corona,
    ("eu-corona", "statement"): _eu_corona,
}


def _check(kind: str, variant: str) -> _Formula:
    if kind not in KINDS:
        raise ValueError(f"unknown bound kind {kind!r}; expected one of {', '.join(KINDS)}")
    if variant not in VARIANTS:
        raise ValueError(f"unknown formula variant {variant!r}; expected one of {', '.join(VARIANTS)}")
    return _FORMULAS[kind, variant]


def bound_pair(kind: str, p1: GraphParams, p2: GraphParams, variant: str = CORRECTED) -> BoundPair:
    f = _check(kind, variant)
    lo = f(p1.n, p1.m, p1.min_deg, p2.n, p2.m, p2.min_deg)
    hi = f(p1.n, p1.m, p1.max_deg, p2.n, p2.m, p2.max_deg)
    return BoundPair(lo, hi, kind, variant)


def eso_join_bounds(p1: GraphParams, p2: GraphParams) -> BoundPair:
    return bound_pair("eso-join", p1, p2)


def eu_join_bounds(p1: GraphParams, p2: GraphParams, variant: str = CORRECTED) -> BoundPair:
    """EU bounds for the join. ``variant="statement"`` reproduces the
    misprinted formula and is only meant for counterexample searches."""
    return bound_pair("eu-join", p1, p2, variant)


def eso_corona_bounds(p1: GraphParams, p2: GraphParams) -> BoundPair:
    return bound_pair("eso-corona", p1, p2)


def eu_corona_bounds(p1: GraphParams, p2: GraphParams) -> BoundPair:
    return bound_pair("eu-corona", p1, p2)


def regular_exact(kind: str, p1: GraphParams, p2: GraphParams) -> float:
    """Exact index of the product of two regular graphs."""
    f = _check(kind, CORRECTED)
    if not (p1.is_regular and p2.is_regular):
        raise ValueError("regular_exact needs two regular parameter sets")
    return f(p1.n, p1.m, p1.regular_deg, p2.n, p2.m, p2.regular_deg)


def printed_proposition(kind: str, p1: GraphParams, p2: GraphParams) -> float:
    """Regular-case value as originally printed, kept for comparison only.

    The ESO variants drop the square-root factor from the cross term, so they
    disagree with :func:`regular_exact` whenever that factor is not 1.
    """
    _check(kind, CORRECTED)
    if not (p1.is_regular and p2.is_regular):
        raise ValueError("printed_proposition needs two regular parameter sets")
    n1, m1, r1 = p1.n, p1.m, p1.regular_deg
    n2, m2, r2 = p2.n, p2.m, p2.regular_deg
    if kind == "eso-join":
        return (2 * SQRT2 * m1 * (r1 + n2) ** 2 + 2 * SQRT2 * m2 * (r2 + n1) ** 2
                + n1 * n2 * (r1 + r2 + n1 + n2))
    if kind == "eso-corona":
        return (2 * SQRT2 * m1 * (r1 + n2) ** 2 + 2 * SQRT2 * n1 * m2 * (r2 + 1) ** 2
                + n1 * n2 * (r1 + r2 + 1 + n2))
    # The printed EU propositions agree with the corrected theorems.
    return regular_exact(kind, p1, p2)
