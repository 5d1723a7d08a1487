"""Exact maximisation for small groups, and an LP-format model writer."""
from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .group import GroupParams
from .sets import VectorSet, build_first_coord_odd
from .verify import BlockedTable, TooLarge, violating_triples
from .bounds import pair_counting_bound

EXHAUSTIVE_MAX_ORDER = 20
BNB_MAX_ORDER = 4096
ILP_MAX_ORDER = 4096

PROVEN = "proven-optimal"
NODE_LIMIT = "node-limit-reached"


@dataclass(frozen=True)
class ExactResult:
    max_size: int
    witness_set: VectorSet
    nodes_explored: int
    status: str


def zero_sum_triples(params: GroupParams) -> np.ndarray:
    """Every unordered triple of distinct group elements summing to zero, lexicographic."""
    full = VectorSet(params, np.arange(params.order, dtype=np.int64))
    t = violating_triples(full)
    return t[np.lexsort(t.T[::-1])]


def exhaustive_max(
    params: GroupParams, max_order: int = EXHAUSTIVE_MAX_ORDER, low_bits: int = 20
) -> ExactResult:
    """Check every one of the 2^|G| subsets against every zero-sum triple.

    Subsets are bitmasks over codes. They are swept in chunks sharing the
    high bits; a chunk whose fixed high part already contains a triple is
    skipped, and only triples whose high part lies inside the prefix are
    tested on the low bits.
    """
    N = params.order
    if N > max_order:
        raise TooLarge(
            f"exhaustive search needs |G| <= {max_order}, got {N}; use branch_and_bound_max"
        )
    low_bits = min(low_bits, N)
    low_mask = (1 << low_bits) - 1
    triples = [sum(1 << int(c) for c in t) for t in zero_sum_triples(params)]
    low = np.arange(1 << low_bits, dtype=np.uint64)
    low_count = np.bitwise_count(low).astype(np.int64)
    best, best_mask = -1, 0
    for prefix in range(1 << (N - low_bits)):
        high = prefix << low_bits
        if any(t & ~low_mask and t & high == t for t in triples):
            continue
        ok = np.ones(low.size, dtype=bool)
        for t in triples:
            th, tl = t & ~low_mask, t & low_mask
            if th & high == th:
                tl = np.uint64(tl)
                ok &= (low & tl) != tl
        sizes = np.where(ok, low_count, -1)
        k = int(np.argmax(sizes))
        size = int(sizes[k]) + prefix.bit_count()
        if sizes[k] >= 0 and size > best:
            best, best_mask = size, high | k
    members = [c for c in range(N) if best_mask >> c & 1]
    return ExactResult(best, VectorSet(params, members), 1 << N, PROVEN)


def branch_and_bound_max(
    params: GroupParams,
    node_limit: int = 10_000_000,
    seed: bool = True,
    use_bound_cap: bool = False,
) -> ExactResult:
    """Depth-first include-first search over ascending codes.

    A node is one inclusion. A branch is cut when the members so far plus
    every still-unblocked later candidate cannot beat the incumbent. With
    ``use_bound_cap`` the search also stops once the incumbent reaches the
    m = 4 pair-counting bound; it is off by default so that the result is a
    proof independent of that bound.
    """
    if params.order > BNB_MAX_ORDER:
        raise TooLarge(f"branch and bound needs |G| <= {BNB_MAX_ORDER}, got {params.order}")
    best = VectorSet(params, [])
    if seed and params.m == 4:
        best = build_first_coord_odd(params)
    cap = pair_counting_bound(params).upper_bound if use_bound_cap and params.m == 4 else None
    bt = BlockedTable(params)
    nodes = 0
    exhausted = False

    def dfs(cands: np.ndarray) -> bool:
        # returns False to abort the whole search
        nonlocal best, nodes, exhausted
        for i, c in enumerate(cands):
            if len(bt) + (len(cands) - i) <= len(best):
                return True
            if cap is not None and len(best) >= cap:
                return True
            if nodes >= node_limit:
                exhausted = True
                return False
            nodes += 1
            bt.insert(int(c))
            if len(bt) > len(best):
                best = bt.to_set()
            rest = cands[i + 1:]
            if not dfs(rest[bt.table[rest] == 0]):
                return False
            bt.pop()
        return True

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, params.order + 100))
    try:
        dfs(np.arange(params.order, dtype=np.int64))
    finally:
        sys.setrecursionlimit(old)
    return ExactResult(len(best), best, nodes, NODE_LIMIT if exhausted else PROVEN)


def export_ilp(params: GroupParams, sink: TextIO) -> tuple[int, int]:
    """Write the binary triple model in LP format; returns (variables, constraints)."""
    if params.order > ILP_MAX_ORDER:
        raise TooLarge(f"ILP export needs |G| <= {ILP_MAX_ORDER}, got {params.order}")
    N = params.order
    triples = zero_sum_triples(params)
    sink.write(f"\\ largest 3-zero-sum-free subset of {params}\n")
    sink.write("Maximize\n")
    terms = [f"x{c}" for c in range(N)]
    for k in range(0, N, 10):
        head = " obj: " if k == 0 else " + "
        sink.write(head + " + ".join(terms[k:k + 10]) + "\n")
    sink.write("Subject To\n")
    for i, (a, b, c) in enumerate(triples):
        sink.write(f" t{i}: x{a} + x{b} + x{c} <= 2\n")
    sink.write("Binary\n")
    for c in range(N):
        sink.write(f" x{c}\n")
    sink.write("End\n")
    return N, len(triples)
