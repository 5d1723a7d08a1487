"""Sizes of the explicit constructions for n = 1..10 at m = 4, with verification timings.

Full pair-scan verification runs up to --verify-max-n; above that a random
pair falsification is used.
"""
import argparse
import time

import numpy as np

from zerosumfree import GroupParams, build_first_coord_odd, build_odd_box, build_odd_weight
from zerosumfree import pair_counting_bound, verify_pairwise
from zerosumfree.verify import falsify_random_pairs

parser = argparse.ArgumentParser()
parser.add_argument("--max-n", type=int, default=10)
parser.add_argument("--verify-max-n", type=int, default=7)
parser.add_argument("--samples", type=int, default=10**7)
args = parser.parse_args()

rng = np.random.default_rng(0)
print(f"{'n':>2} {'bound':>8} {'first-odd':>9} {'odd-wt':>8} {'odd-box':>7}  check")
for n in range(1, args.max_n + 1):
    p = GroupParams(4, n)
    a, b, c = build_first_coord_odd(p), build_odd_weight(p), build_odd_box(p)
    t0 = time.perf_counter()
    if n <= args.verify_max_n:
        ok = all(verify_pairwise(H).is_free for H in (a, b, c))
        how = "pair scan"
    else:
        ok = all(falsify_random_pairs(H, args.samples, rng) is None for H in (a, b, c))
        how = f"{args.samples:.0e} random pairs"
    dt = time.perf_counter() - t0
    bound = pair_counting_bound(p).upper_bound
    print(f"{n:>2} {bound:>8} {len(a):>9} {len(b):>8} {len(c):>7}  "
          f"{'free' if ok else 'VIOLATION'} ({how}, {dt:.2f}s)")
