"""Exact maxima on small groups from both engines.

Note (Z/4Z)^1: {0, 1, 2} has no distinct zero-sum triple, so the maximum is 3,
one above |G|/2.
"""
import time

from zerosumfree import GroupParams, branch_and_bound_max, exhaustive_max

CASES = [(4, 1), (4, 2), (3, 1), (3, 2), (3, 3), (2, 2), (2, 3), (2, 4), (5, 1), (5, 2)]

print(f"{'group':>12} {'exhaustive':>10} {'bnb':>5} {'nodes':>8} {'secs':>6}")
for m, n in CASES:
    p = GroupParams(m, n)
    t0 = time.perf_counter()
    ex = exhaustive_max(p, max_order=27).max_size if p.order <= 27 else None
    bb = branch_and_bound_max(p)
    print(f"{str(p):>12} {ex if ex is not None else '-':>10} {bb.max_size:>5} "
          f"{bb.nodes_explored:>8} {time.perf_counter() - t0:>6.2f}")
