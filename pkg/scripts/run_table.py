#!/usr/bin/env python3
"""Reproduce the verified-cases table for powers of generic forms.

For each cell (n, d, m) this verifies the conjectured Hilbert series of an
ideal generated by k m-th powers of generic degree-d forms, at three values
of k spanning the interesting range. The two large cells are optional
stretch targets; enable them with --stretch and expect long runtimes.

Usage:
    python3 scripts/run_table.py [--stretch] [--seed S] [--budget ENTRIES]
"""

import argparse
import sys
import time

from genforms.macaulay import ResourceLimit
from genforms.verifier import (
    DEFAULT_BUDGET,
    STRETCH_CELLS,
    TABLE_CELLS,
    CaseSpec,
    suite_k_values,
    verify_case,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--stretch", action="store_true", help="include the two large cells")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    args = ap.parse_args()

    cells = TABLE_CELLS + (STRETCH_CELLS if args.stretch else ())
    print(f"{'n':>3} {'d':>3} {'m':>3} {'k':>6} {'trunc':>6} {'verdict':<12} seconds")
    failures = 0
    for n, d, m in cells:
        for k in suite_k_values(n, d, m):
            start = time.perf_counter()
            try:
                rec = verify_case(CaseSpec(n, d, m, k, seed=args.seed), budget=args.budget)
                verdict, trunc = rec.verdict, rec.trunc
            except ResourceLimit as exc:
                verdict, trunc = f"Skipped({exc})", "-"
            elapsed = time.perf_counter() - start
            print(f"{n:>3} {d:>3} {m:>3} {k:>6} {trunc:>6} {verdict:<12} {elapsed:7.2f}")
            if verdict not in ("Verified",) and not verdict.startswith("Skipped"):
                failures += 1
    return 2 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
