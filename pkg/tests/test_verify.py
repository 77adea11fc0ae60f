import io
import json
import math

import pytest

from sombor_bounds import (
    Graph,
    complete_graph,
    cycle_graph,
    eso,
    eu,
    parse_graph6,
    params_of,
    path_graph,
)
from sombor_bounds.bounds import bound_pair
from sombor_bounds.products import product
from sombor_bounds.verify import (
    RECORD_FIELDS,
    SweepConfig,
    enumerate_graphs,
    iter_records,
    make_record,
    random_graph,
    read_records_csv,
    run_sweep,
    verify_pair,
    write_records_csv,
    write_records_jsonl,
)

from conftest import matrix_index, nx_corona, nx_join


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_enumeration_counts(n, count):
    graphs = list(enumerate_graphs(n))
    assert len(graphs) == count
    assert len(set(graphs)) == count


def test_enumeration_order():
    graphs = list(enumerate_graphs(3))
    assert graphs[0] == Graph(3)
    assert graphs[1] == Graph(3, [(1, 2)])   # last bit of (0,1),(0,2),(1,2)
    assert graphs[4] == Graph(3, [(0, 1)])
    assert graphs[-1] == complete_graph(3)


@pytest.mark.parametrize("n", [0, 8])
def test_enumeration_range(n):
    with pytest.raises(ValueError):
        next(enumerate_graphs(n))


def test_random_graph():
    assert random_graph(5, 0.0, 3) == Graph(5)
    assert random_graph(5, 1.0, 3) == complete_graph(5)
    assert random_graph(10, 0.5, 42) == random_graph(10, 0.5, 42)
    assert random_graph(10, 0.5, 42) != random_graph(10, 0.5, 43)
    for p in (-0.1, 1.5, math.nan):
        with pytest.raises(ValueError):
            random_graph(4, p, 0)


def test_random_graph_edge_density():
    total = sum(random_graph(12, 0.3, s).m for s in range(200))
    assert total / (200 * 66) == pytest.approx(0.3, abs=0.02)


def test_verify_pair_regular_collapse():
    (rec,) = verify_pair(cycle_graph(4), cycle_graph(4), ["eso-join"])
    assert rec.g1 == rec.g2 == "Cl"
    assert rec.lower_ok and rec.upper_ok
    for v in (rec.true_value, rec.alpha1, rec.alpha2):
        assert v == pytest.approx(1728 * math.sqrt(2), rel=1e-9)


def test_verify_pair_k1_k1():
    k2 = complete_graph(2)
    recs = verify_pair(complete_graph(1), complete_graph(1))
    assert len(recs) == 4
    for r in recs:
        expected = eso(k2) if r.kind.startswith("eso") else eu(k2)
        assert r.true_value == pytest.approx(expected, rel=1e-12)
        assert r.ok


def test_verify_pair_statement_variant_is_kept_even_when_failing():
    recs = verify_pair(complete_graph(2), complete_graph(2), ["eu-join"], ["proof-conclusion", "statement"])
    assert [r.variant for r in recs] == ["proof-conclusion", "statement"]
    assert recs[0].ok
    assert not recs[1].upper_ok and recs[1].lower_ok
    assert recs[1].gap_upper < 0
    recs = verify_pair(path_graph(3), complete_graph(1), ["eu-join"], ["statement"])
    assert len(recs) == 1


def test_make_record_tolerance():
    r = make_record("@", "@", "eu-join", "proof-conclusion", 10.0, 10.0 + 1e-10, 10.0 - 1e-10, 1e-9)
    assert r.ok and r.gap_lower == 0.0 and r.gap_upper == 0.0
    r = make_record("@", "@", "eu-join", "proof-conclusion", 10.0, 10.0 + 1e-6, 11.0, 1e-9)
    assert not r.lower_ok and r.upper_ok
    assert r.gap_lower == pytest.approx(-1e-6)


def test_config_validation():
    for bad in [dict(max_order_1=0), dict(mode="grid"), dict(mode="random", sample_count=0),
                dict(tolerance=0.0), dict(kinds=("eso-tensor",)), dict(variants=("draft",)),
                dict(max_order_1=8), dict(rng_seed=-1), dict(kinds=())]:
        with pytest.raises(ValueError):
            SweepConfig(**bad)
    SweepConfig(mode="random", max_order_1=12, max_order_2=12)


def test_checks_skip_statement_outside_eu_join():
    cfg = SweepConfig(variants=("proof-conclusion", "statement"))
    assert cfg.checks() == [("eso-join", "proof-conclusion"), ("eu-join", "proof-conclusion"),
                            ("eu-join", "statement"), ("eso-corona", "proof-conclusion"),
                            ("eu-corona", "proof-conclusion")]


@pytest.mark.parametrize("a, b", [(2, 3), (3, 3), (1, 4)])
def test_exhaustive_coverage_exact_orders(a, b):
    cfg = SweepConfig(min_order_1=a, max_order_1=a, min_order_2=b, max_order_2=b, kinds=("eso-join",))
    expected = 2 ** (a * (a - 1) // 2) * 2 ** (b * (b - 1) // 2)
    assert sum(1 for _ in iter_records(cfg)) == expected


def test_exhaustive_coverage_up_to():
    cfg = SweepConfig(max_order_1=3, max_order_2=2)
    res = run_sweep(cfg)
    pairs = (1 + 2 + 8) * (1 + 2)
    for v in res.summary.values():
        assert v["pairs"] == pairs
    assert len(res.records) == 4 * pairs


def test_corrected_sweep_order_3_has_no_failures():
    res = run_sweep(SweepConfig(max_order_1=3, max_order_2=3))
    assert res.corrected_failures == 0
    assert all(v["failures"] == 0 for v in res.summary.values())


def test_statement_sweep_reports_counterexample():
    res = run_sweep(SweepConfig(max_order_1=3, max_order_2=3, kinds=("eu-join",), variants=("statement",)))
    s = res.summary["eu-join/statement"]
    assert s["failures"] > 0
    cex = s["first_counterexample"]
    g1, g2 = parse_graph6(cex["g1"]), parse_graph6(cex["g2"])
    bp = bound_pair("eu-join", params_of(g1), params_of(g2), "statement")
    assert not bp.brackets(eu(product("join", g1, g2)))
    assert s["first_counterexample_no_isolated"]["g1"] == "A_"
    assert res.corrected_failures == 0


def test_record_soundness():
    """Recompute each record with the networkx-built product and matrix oracle."""
    cfg = SweepConfig(mode="random", sample_count=40, rng_seed=11, max_order_1=5, max_order_2=5)
    for r in run_sweep(cfg).records:
        g1, g2 = parse_graph6(r.g1), parse_graph6(r.g2)
        index_name, op = r.kind.split("-")
        prod = nx_join(g1, g2) if op == "join" else nx_corona(g1, g2)
        assert abs(matrix_index(prod, index_name) - r.true_value) <= 1e-12 * max(1.0, r.true_value)
        bp = bound_pair(r.kind, params_of(g1), params_of(g2), r.variant)
        assert (bp.alpha1, bp.alpha2) == (r.alpha1, r.alpha2)


def test_random_sweep_deterministic_and_seed_sensitive():
    cfg = SweepConfig(mode="random", sample_count=50, rng_seed=7)
    a, b = run_sweep(cfg), run_sweep(cfg)
    assert a.records == b.records
    assert a.summary == b.summary
    c = run_sweep(SweepConfig(mode="random", sample_count=50, rng_seed=8))
    assert c.records != a.records


def test_summary_regular_pairs_flag_printed_propositions():
    res = run_sweep(SweepConfig(max_order_1=2, max_order_2=2))
    s = res.summary
    # regular graphs of order <= 2: K1, 2K1, K2
    assert s["eso-join/proof-conclusion"]["regular_pairs"]["pairs"] == 9
    assert s["eso-join/proof-conclusion"]["regular_pairs"]["printed_proposition_mismatches"] == 9
    assert s["eu-join/proof-conclusion"]["regular_pairs"]["printed_proposition_mismatches"] == 0
    assert s["eu-corona/proof-conclusion"]["isolated_vertex_pairs"]["pairs"] == 9 - 1  # only K2 x K2 has no degree-0 vertex


def test_csv_and_jsonl_round_trip():
    recs = run_sweep(SweepConfig(max_order_1=2, max_order_2=2, variants=("proof-conclusion", "statement"))).records
    buf = io.StringIO()
    write_records_csv(recs, buf, "seed=0")
    text = buf.getvalue()
    lines = text.splitlines()
    assert lines[0] == "# seed=0"
    assert lines[1] == ",".join(RECORD_FIELDS)
    assert read_records_csv(io.StringIO(text)) == recs

    buf = io.StringIO()
    write_records_jsonl(recs, buf, "seed=0")
    rows = [json.loads(ln) for ln in buf.getvalue().splitlines()]
    assert rows[0] == {"header": "seed=0"}
    assert list(rows[1]) == list(RECORD_FIELDS)
    assert rows[1]["true_value"] == recs[0].true_value
