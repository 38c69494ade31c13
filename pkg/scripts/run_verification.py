#!/usr/bin/env python3
"""Run every verification suite at its default size and print a summary table.

Usage: python scripts/run_verification.py [--seed S]
Exits with the total failure count (capped at 125).
"""

import argparse
import sys

sys.path.insert(0, "src")

from plueckerfan.verify import SUITES, run_suite


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    total = 0
    print(f"{'suite':<14} {'n':>4} {'checks':>8} {'failures':>9} {'secs':>8}")
    for name in sorted(SUITES):
        report = run_suite(name, seed=args.seed)
        total += len(report.failures)
        print(f"{name:<14} {report.n:>4} {report.checks:>8} "
              f"{len(report.failures):>9} {report.elapsed_s:>8.1f}")
        for failure in report.failures[:3]:
            print(f"    {failure!r}")
    return min(total, 125)


if __name__ == "__main__":
    sys.exit(main())
