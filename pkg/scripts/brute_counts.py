"""Brute-force neutral-element buckets for (k, n) next to the closed forms.

    python scripts/brute_counts.py 3 3 [--method pruned]
"""

import argparse
import time

from qtsemigroups.config import BruteCountConfig
from qtsemigroups.enumeration import BRUTE_METHODS, brute_count, formula_counts, parity_of


def run(cfg: BruteCountConfig) -> bool:
    t0 = time.perf_counter()
    brute = brute_count(cfg.k, cfg.n, method=cfg.method, budget=cfg.budget)
    elapsed = time.perf_counter() - t0
    formula = formula_counts(cfg.k, parity_of(cfg.n))
    ok = True
    print(f"k={cfg.k} n={cfg.n} method={cfg.method} ({elapsed:.2f}s)")
    for name, value in brute.counts().items():
        expected = getattr(formula, name)
        ok &= value == expected
        print(f"  {name:<6} brute={value:<6} formula={expected:<6} {'ok' if value == expected else 'MISMATCH'}")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("k", type=int)
    ap.add_argument("n", type=int)
    ap.add_argument("--method", choices=BRUTE_METHODS, default="pruned")
    a = ap.parse_args()
    raise SystemExit(0 if run(BruteCountConfig(a.k, a.n, a.method)) else 1)
