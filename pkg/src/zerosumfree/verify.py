"""Deciding 3-zero-sum-freeness.

The fast path scans unordered pairs {x, y} of members and looks up
z = -(x + y); a violation needs z in H and z distinct from both x and y.
Pairs are visited in ascending (x.code, y.code) order, so the first hit is
the lexicographically smallest violating triple, which is also what the
triple-enumeration oracle returns.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from .group import GroupParams, NegSum, add, decode
from .sets import TABLE_CAP, VectorSet

# pair matrix entries per block
BLOCK_ENTRIES = 1 << 21
ORACLE_LIMIT = 1000


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    x: int
    y: int
    z: int
    params: GroupParams = field(repr=False)

    def __post_init__(self):
        if not self.x < self.y < self.z:
            raise ValueError("witness codes must be strictly ascending")

    @classmethod
    def of(cls, a, b, c, params):
        x, y, z = sorted((int(a), int(b), int(c)))
        return cls(x, y, z, params)

    def is_valid(self) -> bool:
        p = self.params
        return add(add(self.x, self.y, p), self.z, p) == 0

    def vectors(self):
        return [decode(c, self.params) for c in (self.x, self.y, self.z)]


@dataclass(frozen=True)
class VerifyResult:
    is_free: bool
    witness: Optional[Witness]
    pairs_checked: int
    elapsed: float

    @property
    def pairs_per_sec(self) -> float:
        return self.pairs_checked / self.elapsed if self.elapsed > 0 else float("inf")


def _pairs_before(i: int, n: int) -> int:
    # pairs (r, s), r < s, with r < i
    return i * (n - 1) - i * (i - 1) // 2


class _PairScan:
    def __init__(self, H: VectorSet):
        self.params = H.params
        self.codes = np.sort(H.codes)
        self.member = H.membership.many
        self.negsum = NegSum(H.params)
        n = len(self.codes)
        rows = max(1, BLOCK_ENTRIES // max(n, 1))
        self.blocks = [(i, min(i + rows, n)) for i in range(0, max(n - 1, 0), rows)]

    def hits(self, block):
        """Boolean hit matrix for rows [i0, i1) against columns >= i0, plus z."""
        i0, i1 = block
        c = self.codes
        x = c[i0:i1, None]
        y = c[None, i0:]
        z = self.negsum(x, y)
        upper = np.arange(i0, len(c))[None, :] > np.arange(i0, i1)[:, None]
        hit = upper & (z != x) & (z != y)
        hit &= self.member(z)
        return hit, z

    def first(self, block):
        hit, z = self.hits(block)
        if not hit.any():
            return None
        r, s = np.unravel_index(int(np.argmax(hit)), hit.shape)
        i0 = block[0]
        i, j = i0 + int(r), i0 + int(s)
        return i, j, int(z[r, s])

    def run(self, fn, workers: int):
        if workers <= 1:
            for b in self.blocks:
                yield fn(b)
            return
        with ThreadPoolExecutor(workers) as pool:
            # bounded look-ahead keeps early exit cheap and results in block order
            for k in range(0, len(self.blocks), workers):
                yield from pool.map(fn, self.blocks[k:k + workers])


def verify_pairwise(H: VectorSet, workers: int = 1) -> VerifyResult:
    t0 = time.perf_counter()
    scan = _PairScan(H)
    n = len(scan.codes)
    for found in scan.run(scan.first, workers):
        if found is not None:
            i, j, z = found
            c = scan.codes
            w = Witness.of(c[i], c[j], z, H.params)
            checked = _pairs_before(i, n) + (j - i)
            return VerifyResult(False, w, checked, time.perf_counter() - t0)
    return VerifyResult(True, None, n * (n - 1) // 2, time.perf_counter() - t0)


def verify_naive_oracle(H: VectorSet) -> VerifyResult:
    """Exhaustive triple enumeration on decoded coordinate lists."""
    if len(H) > ORACLE_LIMIT:
        raise TooLarge(f"oracle limited to {ORACLE_LIMIT} members, got {len(H)}")
    t0 = time.perf_counter()
    m = H.params.m
    codes = sorted(H)
    vecs = [decode(c, H.params) for c in codes]
    checked = 0
    for a, b, c in combinations(range(len(codes)), 3):
        checked += 1
        if all((p + q + r) % m == 0 for p, q, r in zip(vecs[a], vecs[b], vecs[c])):
            w = Witness.of(codes[a], codes[b], codes[c], H.params)
            return VerifyResult(False, w, checked, time.perf_counter() - t0)
    return VerifyResult(True, None, checked, time.perf_counter() - t0)


def falsify_random_pairs(
    H: VectorSet, samples: int, rng: np.random.Generator, chunk: int = 1 << 20
) -> Optional[Witness]:
    """Sample random member pairs and look for a completing distinct third member.

    Returns the first witness found, or None. Cheap evidence for sets too large
    for the full pair scan.
    """
    c = H.codes
    if len(c) < 3:
        return None
    negsum = NegSum(H.params)
    done = 0
    while done < samples:
        k = min(chunk, samples - done)
        x = c[rng.integers(len(c), size=k)]
        y = c[rng.integers(len(c), size=k)]
        z = negsum(x, y)
        hit = (x != y) & (z != x) & (z != y) & H.membership.many(z)
        if hit.any():
            i = int(np.argmax(hit))
            return Witness.of(x[i], y[i], z[i], H.params)
        done += k
    return None


def pair_hits(H: VectorSet, workers: int = 1) -> int:
    """Number of unordered member pairs whose completing third element is a distinct member."""
    scan = _PairScan(H)
    return sum(scan.run(lambda b: int(scan.hits(b)[0].sum()), workers))


def count_violations(H: VectorSet, workers: int = 1) -> int:
    hits = pair_hits(H, workers)
    assert hits % 3 == 0, "each violating triple is seen from exactly three pairs"
    return hits // 3


def violating_triples(H: VectorSet) -> np.ndarray:
    """All violating triples as a (k, 3) array of ascending codes, lexicographically sorted."""
    scan = _PairScan(H)
    out = []
    for b in scan.blocks:
        hit, z = scan.hits(b)
        r, s = np.nonzero(hit)
        zz = z[r, s]
        y = scan.codes[b[0] + s]
        keep = zz > y
        x = scan.codes[b[0] + r]
        out.append(np.stack([x[keep], y[keep], zz[keep]], axis=1))
    if not out:
        return np.zeros((0, 3), dtype=np.int64)
    return np.concatenate(out)


class BlockedTable:
    """table[z] = number of unordered member pairs {x, y} with x + y + z = 0 and z not in {x, y}.

    Supports incremental insert and removal; single writer.
    """

    def __init__(self, params: GroupParams, cap: int = TABLE_CAP):
        if params.order > cap:
            raise TooLarge(
                f"blocked table needs {params.order} entries (cap {cap}); use verify_pairwise"
            )
        self.params = params
        self.table = np.zeros(params.order, dtype=np.int64)
        self.members: list[int] = []
        self._in = np.zeros(params.order, dtype=bool)
        self._negsum = NegSum(params)

    @classmethod
    def from_set(cls, H: VectorSet, cap: int = TABLE_CAP) -> "BlockedTable":
        bt = cls(H.params, cap)
        c = np.asarray(H.codes)
        bt.members = [int(v) for v in c]
        bt._in[c] = True
        if len(c) > 1:
            rows = max(1, BLOCK_ENTRIES // len(c))
            for i0 in range(0, len(c) - 1, rows):
                i1 = min(i0 + rows, len(c))
                x = c[i0:i1, None]
                y = c[None, :]
                z = bt._negsum(x, y)
                upper = np.arange(len(c))[None, :] > np.arange(i0, i1)[:, None]
                ok = upper & (z != x) & (z != y)
                bt.table += np.bincount(z[ok], minlength=H.params.order)
        return bt

    def __getitem__(self, code: int) -> int:
        return int(self.table[code])

    def __contains__(self, code: int) -> bool:
        return bool(self._in[code])

    def __len__(self):
        return len(self.members)

    def _touched(self, v: int) -> np.ndarray:
        others = np.asarray(self.members, dtype=np.int64)
        others = others[others != v]
        z = self._negsum(np.int64(v), others)
        return z[(z != v) & (z != others)]

    def can_add(self, v: int) -> bool:
        return not self._in[v] and self.table[v] == 0

    def insert(self, v: int):
        if self._in[v]:
            raise ValueError(f"code {v} already present")
        np.add.at(self.table, self._touched(v), 1)
        self.members.append(v)
        self._in[v] = True

    def remove(self, v: int):
        if not self._in[v]:
            raise ValueError(f"code {v} not present")
        self.members.remove(v)
        self._in[v] = False
        np.subtract.at(self.table, self._touched(v), 1)

    def pop(self) -> int:
        v = self.members.pop()
        self._in[v] = False
        np.subtract.at(self.table, self._touched(v), 1)
        return v

    def to_set(self) -> VectorSet:
        return VectorSet(self.params, self.members)


def blocked_table(H: VectorSet, cap: int = TABLE_CAP) -> np.ndarray:
    return BlockedTable.from_set(H, cap).table.copy()
