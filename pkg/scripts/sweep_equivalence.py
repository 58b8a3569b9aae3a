"""Run the compiled fast associativity test over whole quasitrivial spaces and
compare the accepted set with the pruned backtracking search.

    python scripts/sweep_equivalence.py [--family 3,3 ...]
"""

import argparse
import time

import numpy as np

from qtsemigroups.config import SweepConfig
from qtsemigroups.enumeration import quasitrivial_index, quasitrivial_space_size
from qtsemigroups.search import pruned_associative_tables
from qtsemigroups.sweep import sweep_fast


def run(cfg: SweepConfig) -> bool:
    ok = True
    print(f"{'k':>2} {'n':>2} {'space':>14} {'found':>6} {'sweep s':>8} {'pruned s':>8}  agree")
    for k, n in cfg.families:
        t0 = time.perf_counter()
        swept = sweep_fast(k, n, chunk=cfg.chunk, budget=cfg.budget)
        t1 = time.perf_counter()
        pruned = np.array([quasitrivial_index(T) for T in pruned_associative_tables(k, n)], np.int64)
        t2 = time.perf_counter()
        agree = np.array_equal(swept, pruned)
        ok &= agree
        size = quasitrivial_space_size(k, n)
        print(f"{k:>2} {n:>2} {size:>14} {len(swept):>6} {t1 - t0:>8.1f} {t2 - t1:>8.2f}  {agree}")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--family", action="append", help="k,n (repeatable)")
    a = ap.parse_args()
    cfg = SweepConfig()
    if a.family:
        fams = tuple(tuple(int(x) for x in f.split(",")) for f in a.family)
        cfg = SweepConfig(families=fams)
    raise SystemExit(0 if run(cfg) else 1)
