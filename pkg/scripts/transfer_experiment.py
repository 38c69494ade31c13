#!/usr/bin/env python3
"""Dilation point counts of one poset across every order/chain partition.

Demonstrates that the count only depends on the dilation factor, and shows a
Minkowski decomposition of the coordinatewise-largest point.

Usage: python scripts/transfer_experiment.py [n] [t]
  n: build the join-irreducible grid of the n-th semistandard lattice (default 4)
  t: dilation factor (default 2)
"""

import sys

sys.path.insert(0, "src")

from plueckerfan.chain_order import (
    ChainOrderPartition,
    dilation_points,
    minkowski_decompose,
)
from plueckerfan.plucker_lattices import semistandard_lattice


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    t = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    poset = semistandard_lattice(n).ji_poset
    print(f"grid of {len(poset)} cells, dilation factor {t}")
    counts = set()
    for mask in range(1 << len(poset)):
        part = ChainOrderPartition.from_masks(poset, mask)
        pts = dilation_points(part, t)
        counts.add(len(pts))
        if mask in (0, (1 << len(poset)) - 1):
            tag = "chain" if mask == 0 else "order"
            print(f"  {tag} partition: {len(pts)} lattice points")
    print(f"  distinct counts over all {1 << len(poset)} partitions: {sorted(counts)}")

    part = ChainOrderPartition.chain_polytope(poset)
    top = max(dilation_points(part, t), key=lambda p: sorted(p.values(), reverse=True))
    pieces = minkowski_decompose(part, top, t)
    print(f"  sample decomposition of {top}:")
    for piece in pieces:
        print(f"    + {piece}")


if __name__ == "__main__":
    main()
