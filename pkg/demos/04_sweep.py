"""
Brute-force sweep
=================

Check all four bounds on every pair of labeled graphs up to order 4, then
the misprinted EU-join statement on the same pairs, and finally a seeded
random sample of larger graphs.
"""

import io
import json

from sombor_bounds import SweepConfig, run_sweep
from sombor_bounds.verify import seed_header, write_records_csv

res = run_sweep(SweepConfig(max_order_1=4, max_order_2=4, variants=("proof-conclusion", "statement")))
for key, s in res.summary.items():
    print(f"{key:28s} pairs={s['pairs']:5d} failures={s['failures']:5d} "
          f"first counterexample={s['first_counterexample'] and (s['first_counterexample']['g1'], s['first_counterexample']['g2'])}")

cfg = SweepConfig(mode="random", sample_count=200, rng_seed=2024, max_order_1=7, max_order_2=6)
rand = run_sweep(cfg)
print("\nrandom sample, corrected failures:", rand.corrected_failures)
print(json.dumps(rand.summary["eso-corona/proof-conclusion"]["gap_ratio_upper"]))

buf = io.StringIO()
write_records_csv(rand.records[:3], buf, seed_header(cfg))
print(buf.getvalue())
