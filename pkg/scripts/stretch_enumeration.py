#!/usr/bin/env python3
"""Long-running enumeration of twisted Ward left quasigroups at orders 8-9.

These orders are outside the quick test targets; known reference values are
ell(8) = 93 and ell(9) = 64.  Expect runtimes from minutes (n=8, several
workers) to many hours (n=9).
"""
import argparse
import sys
import time

from tward import enumerate_tw_left_quasigroups
from tward.errors import BudgetExceededError


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, choices=[8, 9])
    ap.add_argument("--budget", type=float, default=3600.0, help="seconds")
    ap.add_argument("--threads", type=int, default=4)
    args = ap.parse_args()

    start = time.monotonic()
    try:
        report = enumerate_tw_left_quasigroups(
            args.n, budget_seconds=args.budget, threads=args.threads
        )
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}")
        return 3
    elapsed = time.monotonic() - start
    print(f"n={report.n} total={report.total} permutational={report.permutational_count} "
          f"quasigroups={report.quasigroup_count} neither={report.neither_count} "
          f"elapsed={elapsed:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
