"""Recompute the k=1..6 table of counting sequences and compare with the embedded values.

    python scripts/table1.py [--k-max 10] [--out table1.csv]
"""

import argparse
import sys

from qtsemigroups.config import Table1Config
from qtsemigroups.enumeration import TABLE1_COLUMNS, table1_csv, table1_golden, table1_rows


def run(cfg: Table1Config) -> int:
    rows = table1_rows(cfg.ks + cfg.extra_ks)
    text = table1_csv(rows)
    if cfg.out_csv:
        with open(cfg.out_csv, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    golden = table1_golden()
    bad = [
        (r["k"], c)
        for r in rows
        if r["k"] <= len(golden["q2"])
        for c in TABLE1_COLUMNS
        if r[c] != golden[c][r["k"] - 1]
    ]
    print(f"golden cells compared: {6 * len(TABLE1_COLUMNS)}, mismatches: {bad or 'none'}")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--out")
    a = ap.parse_args()
    extra = tuple(range(7, a.k_max + 1))
    raise SystemExit(run(Table1Config(out_csv=a.out, extra_ks=extra)))
