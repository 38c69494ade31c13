#!/usr/bin/env python3
"""Census of the maximal-cone facets: enumerated counts against the closed formulas.

Usage: python scripts/facet_census.py [max_n]
"""

import sys
import time

sys.path.insert(0, "src")

from plueckerfan.cones import facet_count


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    print(f"{'n':>3} {'total':>7} {'diamond':>8} {'special':>8} {'pbw':>7} {'secs':>7}")
    for n in range(3, max_n + 1):
        start = time.time()
        fc = facet_count(n)
        print(f"{n:>3} {fc.ssyt_total:>7} {fc.diamond:>8} {fc.special:>8} "
              f"{fc.pbw_total:>7} {time.time() - start:>7.2f}")


if __name__ == "__main__":
    main()
