"""Brute-force checking of the product bounds over small graphs.

A sweep walks graph pairs (every labeled pair up to given orders, or a seeded
random sample), builds the join and corona, computes ESO/EU directly and
compares against the closed-form bounds. Every comparison becomes a
:class:`VerificationRecord`; :func:`summarize` condenses them per
kind/variant and keeps the first counterexample found.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass, field
from typing import IO, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import bounds as _bounds
from .bounds import CORRECTED, KINDS, VARIANTS
from .graph import Graph, params_of
from .graph6 import parse_graph6, write_graph6
from .indices import eso, eu
from .products import corona, join

MAX_ENUM_ORDER = 7
ABS_TOL = 1e-12

RECORD_FIELDS = (
    "g1", "g2", "kind", "variant", "true_value",
    "alpha1", "alpha2", "lower_ok", "upper_ok", "gap_lower", "gap_upper",
)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield all ``2**(n(n-1)/2)`` labeled graphs on ``n`` vertices.

    Graphs come in lexicographic order of their upper-triangle bit vector,
    read column-wise ``(0,1), (0,2), (1,2), (0,3), ...`` with the first pair
    as the most significant bit.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"enumeration order must be in 1..{MAX_ENUM_ORDER}, got {n}")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    nbits = len(pairs)
    for mask in range(1 << nbits):
        yield Graph(n, (pairs[k] for k in range(nbits) if (mask >> (nbits - 1 - k)) & 1))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a PCG64 generator seeded by ``seed``."""
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise ValueError(f"edge probability must lie in [0, 1], got {p!r}")
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    rng = np.random.default_rng(seed)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    draws = rng.random(len(pairs))
    return Graph(n, (e for e, x in zip(pairs, draws) if x < p))


def regular_graphs(n: int) -> Iterator[Graph]:
    """Regular graphs among the labeled graphs of order ``n``."""
    for g in enumerate_graphs(n):
        if min(g.degrees) == max(g.degrees):
            yield g


@dataclass(frozen=True)
class VerificationRecord:
    g1: str
    g2: str
    kind: str
    variant: str
    true_value: float
    alpha1: float
    alpha2: float
    lower_ok: bool
    upper_ok: bool
    gap_lower: float
    gap_upper: float

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


@dataclass(frozen=True)
class SweepConfig:
    max_order_1: int = 4
    max_order_2: int = 4
    mode: str = "exhaustive"
    sample_count: int = 1000
    rng_seed: int = 0
    tolerance: float = 1e-9
    kinds: Tuple[str, ...] = KINDS
    variants: Tuple[str, ...] = (CORRECTED,)
    min_order_1: int = 1
    min_order_2: int = 1

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if min(self.min_order_1, self.min_order_2) < 1:
            raise ValueError("orders must be >= 1")
        if self.min_order_1 > self.max_order_1 or self.min_order_2 > self.max_order_2:
            raise ValueError("min order exceeds max order")
        if self.mode == "exhaustive" and max(self.max_order_1, self.max_order_2) > MAX_ENUM_ORDER:
            raise ValueError(f"exhaustive sweeps support orders up to {MAX_ENUM_ORDER}")
        if self.mode == "random" and self.sample_count < 1:
            raise ValueError("random mode needs sample_count >= 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 0 <= self.rng_seed < 2**64:
            raise ValueError("rng_seed must be a 64-bit unsigned integer")
        bad = [k for k in self.kinds if k not in KINDS]
        if bad or not self.kinds:
            raise ValueError(f"invalid kinds {bad or '(none)'}; choose from {', '.join(KINDS)}")
        bad = [v for v in self.variants if v not in VARIANTS]
        if bad or not self.variants:
            raise ValueError(f"invalid variants {bad or '(none)'}; choose from {', '.join(VARIANTS)}")

    def checks(self) -> List[Tuple[str, str]]:
        """(kind, variant) combinations to evaluate for each pair.

        The statement variant only differs for eu-join, so it is skipped
        elsewhere.
        """
        out = []
        for kind in self.kinds:
            for variant in self.variants:
                if variant == "statement" and kind != "eu-join":
                    continue
                out.append((kind, variant))
        return out


def bracket_tolerance(true_value: float, alpha1: float, alpha2: float, tolerance: float) -> float:
    """Absolute slack: ``tolerance`` relative to the largest value, floored at 1e-12."""
    return max(tolerance * max(abs(true_value), abs(alpha1), abs(alpha2)), ABS_TOL)


def make_record(g1: str, g2: str, kind: str, variant: str, true_value: float,
                alpha1: float, alpha2: float, tolerance: float) -> VerificationRecord:
    tol = bracket_tolerance(true_value, alpha1, alpha2, tolerance)
    gap_lower = true_value - alpha1
    gap_upper = alpha2 - true_value
    lower_ok = gap_lower >= -tol
    upper_ok = gap_upper >= -tol
    # rounding noise inside the tolerance is reported as an exact hit
    if lower_ok and gap_lower < 0:
        gap_lower = 0.0
    if upper_ok and gap_upper < 0:
        gap_upper = 0.0
    return VerificationRecord(g1, g2, kind, variant, true_value, alpha1, alpha2,
                              lower_ok, upper_ok, gap_lower, gap_upper)


def verify_pair(g1: Graph, g2: Graph, kinds: Sequence[str] = KINDS,
                variants: Sequence[str] = (CORRECTED,),
                tolerance: float = 1e-9) -> List[VerificationRecord]:
    """Check every requested bound on one factor pair."""
    p1, p2 = params_of(g1), params_of(g2)
    s1, s2 = write_graph6(g1), write_graph6(g2)
    products: Dict[str, Graph] = {}
    records = []
    for kind in kinds:
        index_name, op = kind.split("-")
        if op not in products:
            products[op] = join(g1, g2) if op == "join" else corona(g1, g2)
        prod = products[op]
        true_value = eso(prod) if index_name == "eso" else eu(prod)
        for variant in variants:
            bp = _bounds.bound_pair(kind, p1, p2, variant)
            records.append(make_record(s1, s2, kind, variant, true_value,
                                       bp.alpha1, bp.alpha2, tolerance))
    return records


def _graphs_up_to(lo: int, hi: int) -> List[Graph]:
    return [g for n in range(lo, hi + 1) for g in enumerate_graphs(n)]


def iter_pairs(cfg: SweepConfig) -> Iterator[Tuple[Graph, Graph]]:
    if cfg.mode == "exhaustive":
        second = _graphs_up_to(cfg.min_order_2, cfg.max_order_2)
        for n in range(cfg.min_order_1, cfg.max_order_1 + 1):
            for g1 in enumerate_graphs(n):
                for g2 in second:
                    yield g1, g2
        return
    rng = np.random.default_rng(cfg.rng_seed)
    for _ in range(cfg.sample_count):
        n1 = int(rng.integers(cfg.min_order_1, cfg.max_order_1 + 1))
        n2 = int(rng.integers(cfg.min_order_2, cfg.max_order_2 + 1))
        q1, q2 = rng.random(2)
        s1, s2 = (int(s) for s in rng.integers(0, 2**63, size=2))
        yield random_graph(n1, float(q1), s1), random_graph(n2, float(q2), s2)


def iter_records(cfg: SweepConfig) -> Iterator[VerificationRecord]:
    """Stream records in a fixed order: pair by pair, then kind, then variant."""
    checks = cfg.checks()
    for g1, g2 in iter_pairs(cfg):
        for kind, variant in checks:
            yield from verify_pair(g1, g2, (kind,), (variant,), cfg.tolerance)


@dataclass
class _Tally:
    pairs: int = 0
    failures: int = 0
    lower_failures: int = 0
    upper_failures: int = 0
    lower_ratios: List[float] = field(default_factory=list)
    upper_ratios: List[float] = field(default_factory=list)
    first_counterexample: Optional[dict] = None
    first_counterexample_no_isolated: Optional[dict] = None
    isolated_pairs: int = 0
    isolated_failures: int = 0
    regular_pairs: int = 0
    printed_mismatches: int = 0
    first_printed_mismatch: Optional[dict] = None

    def as_dict(self) -> dict:
        def stats(xs: List[float]) -> dict:
            if not xs:
                return {"min": None, "mean": None}
            return {"min": min(xs), "mean": math.fsum(xs) / len(xs)}

        out = {
            "pairs": self.pairs,
            "failures": self.failures,
            "lower_failures": self.lower_failures,
            "upper_failures": self.upper_failures,
            "gap_ratio_lower": stats(self.lower_ratios),
            "gap_ratio_upper": stats(self.upper_ratios),
            "first_counterexample": self.first_counterexample,
            "first_counterexample_no_isolated": self.first_counterexample_no_isolated,
            "isolated_vertex_pairs": {"pairs": self.isolated_pairs,
                                      "failures": self.isolated_failures},
        }
        if self.regular_pairs:
            out["regular_pairs"] = {
                "pairs": self.regular_pairs,
                "printed_proposition_mismatches": self.printed_mismatches,
                "first_printed_mismatch": self.first_printed_mismatch,
            }
        return out


def summarize(records: Iterable[VerificationRecord], tolerance: float = 1e-9) -> Dict[str, dict]:
    """Aggregate records per ``"kind/variant"``.

    For corrected-variant records on regular pairs, the regular value as
    originally printed is also evaluated and mismatches are counted.
    """
    tallies: Dict[str, _Tally] = {}
    params_cache: Dict[str, object] = {}

    def params(s: str):
        if s not in params_cache:
            params_cache[s] = params_of(parse_graph6(s))
        return params_cache[s]

    for r in records:
        t = tallies.setdefault(f"{r.kind}/{r.variant}", _Tally())
        t.pairs += 1
        denom = max(abs(r.true_value), ABS_TOL)
        t.lower_ratios.append(r.gap_lower / denom)
        t.upper_ratios.append(r.gap_upper / denom)
        p1, p2 = params(r.g1), params(r.g2)
        isolated = p1.min_deg == 0 or p2.min_deg == 0
        t.isolated_pairs += isolated
        if not r.ok:
            t.failures += 1
            t.lower_failures += not r.lower_ok
            t.upper_failures += not r.upper_ok
            t.isolated_failures += isolated
            cex = {"g1": r.g1, "g2": r.g2, "true_value": r.true_value,
                   "alpha1": r.alpha1, "alpha2": r.alpha2}
            if t.first_counterexample is None:
                t.first_counterexample = cex
            if not isolated and t.first_counterexample_no_isolated is None:
                t.first_counterexample_no_isolated = cex
        if r.variant == CORRECTED and p1.is_regular and p2.is_regular:
            t.regular_pairs += 1
            printed = _bounds.printed_proposition(r.kind, p1, p2)
            tol = max(tolerance * abs(r.true_value), ABS_TOL)
            if abs(printed - r.true_value) > tol:
                t.printed_mismatches += 1
                if t.first_printed_mismatch is None:
                    t.first_printed_mismatch = {
                        "g1": r.g1, "g2": r.g2,
                        "true_value": r.true_value, "printed_value": printed,
                    }
    return {key: tallies[key].as_dict() for key in sorted(tallies)}


@dataclass
class SweepResult:
    config: SweepConfig
    records: List[VerificationRecord]
    summary: Dict[str, dict]

    @property
    def corrected_failures(self) -> int:
        return sum(v["failures"] for k, v in self.summary.items()
                   if k.endswith("/" + CORRECTED))

    def summary_document(self) -> dict:
        cfg = asdict(self.config)
        cfg["kinds"] = list(self.config.kinds)
        cfg["variants"] = list(self.config.variants)
        return {"config": cfg, "records": len(self.records), "results": self.summary}


def run_sweep(cfg: SweepConfig) -> SweepResult:
    records = list(iter_records(cfg))
    return SweepResult(cfg, records, summarize(records, cfg.tolerance))


# ---------------------------------------------------------------- output

def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_records_csv(records: Iterable[VerificationRecord], fh: IO[str],
                      header_comment: Optional[str] = None) -> None:
    if header_comment:
        fh.write(f"# {header_comment}\n")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(RECORD_FIELDS)
    for r in records:
        writer.writerow([_fmt(getattr(r, f)) for f in RECORD_FIELDS])


def write_records_jsonl(records: Iterable[VerificationRecord], fh: IO[str],
                        header_comment: Optional[str] = None) -> None:
    if header_comment:
        fh.write(json.dumps({"header": header_comment}) + "\n")
    for r in records:
        fh.write(json.dumps({f: getattr(r, f) for f in RECORD_FIELDS}) + "\n")


def read_records_csv(fh: IO[str]) -> List[VerificationRecord]:
    lines = [ln for ln in fh if not ln.startswith("#")]
    out = []
    for row in csv.DictReader(lines):
        out.append(VerificationRecord(
            g1=row["g1"], g2=row["g2"], kind=row["kind"], variant=row["variant"],
            true_value=float(row["true_value"]), alpha1=float(row["alpha1"]),
            alpha2=float(row["alpha2"]), lower_ok=row["lower_ok"] == "true",
            upper_ok=row["upper_ok"] == "true", gap_lower=float(row["gap_lower"]),
            gap_upper=float(row["gap_upper"]),
        ))
    return out


def seed_header(cfg: SweepConfig) -> str:
    return (f"mode={cfg.mode} seed={cfg.rng_seed} max_order_1={cfg.max_order_1} "
            f"max_order_2={cfg.max_order_2} tolerance={cfg.tolerance!r}")
