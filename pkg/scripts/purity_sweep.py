#!/usr/bin/env python3
"""Random greedy completion sweep: build maximal collections from shuffled
insertion orders and histogram their sizes against k(n-k)+1.  For k >= 4 the
equality is open; any deficient maximal collection found here is a research
finding worth reporting.

Usage: python scripts/purity_sweep.py [reps] [seed]
"""

import random
import sys
from itertools import combinations

from wsep.subsets import weakly_separated
from wsep.wscoll import WSCollection

if __name__ == "__main__":
    reps = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    rng = random.Random(seed)
    for k, n in [(2, 9), (3, 8), (4, 8), (4, 9), (5, 10)]:
        expected = k * (n - k) + 1
        sizes = {}
        for _ in range(reps):
            chosen = []
            pool = list(combinations(range(1, n + 1), k))
            rng.shuffle(pool)
            for cand in pool:
                if all(weakly_separated(cand, s) for s in chosen):
                    chosen.append(cand)
            size = len(WSCollection.of(k, n, chosen))
            sizes[size] = sizes.get(size, 0) + 1
        status = "pure" if set(sizes) == {expected} else "DEFICIENT FOUND"
        print(f"k={k} n={n}: sizes={dict(sorted(sizes.items()))} "
              f"expected={expected} -> {status}")
