"""Vector sets and the explicit 3-zero-sum-free constructions."""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .group import GroupParams, InvalidInput, decode, encode

# flat bit-table membership up to this many group elements, sorted-array lookup above
TABLE_CAP = 2**24


class UnsupportedConstruction(ValueError):
    pass


class DuplicateMember(InvalidInput):
    pass


class Membership:
    """O(1) membership over codes; a flat table when the group is small."""

    def __init__(self, params: GroupParams, codes: np.ndarray, force_hash: bool = False):
        self.params = params
        if params.order <= TABLE_CAP and not force_hash:
            self.table = np.zeros(params.order, dtype=bool)
            self.table[codes] = True
            self._set = None
        else:
            self.table = None
            self._set = frozenset(int(c) for c in codes)
            self._sorted = np.sort(codes)

    def __contains__(self, code: int) -> bool:
        if self.table is not None:
            return bool(self.table[code])
        return int(code) in self._set

    def many(self, codes: np.ndarray) -> np.ndarray:
        if self.table is not None:
            return self.table[codes]
        s = self._sorted
        if len(s) == 0:
            return np.zeros(np.shape(codes), dtype=bool)
        idx = np.searchsorted(s, codes).clip(max=len(s) - 1)
        return s[idx] == codes


class VectorSet:
    """An immutable subset of (Z/mZ)^n with insertion-ordered members."""

    def __init__(self, params: GroupParams, codes: Iterable[int] = ()):
        arr = np.fromiter((int(c) for c in codes), dtype=np.int64) if not isinstance(
            codes, np.ndarray
        ) else codes.astype(np.int64, copy=True)
        if arr.size:
            if arr.min() < 0 or arr.max() >= params.order:
                bad = int(np.flatnonzero((arr < 0) | (arr >= params.order))[0])
                raise InvalidInput(f"member {bad}: code {int(arr[bad])} outside the group")
            if np.unique(arr).size != arr.size:
                _, first = np.unique(arr, return_index=True)
                dup = sorted(set(range(arr.size)) - set(first.tolist()))[0]
                raise DuplicateMember(f"member {dup}: duplicate code {int(arr[dup])}")
        arr.setflags(write=False)
        self.params = params
        self.codes = arr

    @classmethod
    def from_vectors(cls, params: GroupParams, vectors: Iterable[Iterable[int]]) -> "VectorSet":
        return cls(params, [encode(list(v), params) for v in vectors])

    @cached_property
    def membership(self) -> Membership:
        return Membership(self.params, self.codes)

    def __len__(self):
        return int(self.codes.size)

    def __iter__(self) -> Iterator[int]:
        return (int(c) for c in self.codes)

    def __contains__(self, code) -> bool:
        return 0 <= int(code) < self.params.order and int(code) in self.membership

    def __eq__(self, other):
        if not isinstance(other, VectorSet):
            return NotImplemented
        return self.params == other.params and np.array_equal(
            np.sort(self.codes), np.sort(other.codes)
        )

    def __repr__(self):
        return f"VectorSet({self.params}, size={len(self)})"

    def vectors(self) -> list[list[int]]:
        return [decode(c, self.params) for c in self]

    def sorted(self) -> "VectorSet":
        return VectorSet(self.params, np.sort(self.codes))

    def issubset(self, other: "VectorSet") -> bool:
        return bool(other.membership.many(self.codes).all()) if len(self) else True


def density(H: VectorSet) -> Fraction:
    return Fraction(len(H), H.params.order)


def _parity_of_weight(params: GroupParams) -> np.ndarray:
    c = np.arange(params.order, dtype=np.int64)
    parity = np.zeros(params.order, dtype=np.int64)
    for _ in range(params.n):
        parity ^= (c % params.m) & 1
        c //= params.m
    return parity


def _require_even(params: GroupParams, name: str):
    if params.m % 2:
        raise UnsupportedConstruction(f"{name} needs an even modulus, got m={params.m}")


def build_first_coord_odd(params: GroupParams) -> VectorSet:
    """All vectors whose first coordinate is odd; size (m/2) * m^(n-1)."""
    _require_even(params, "first-coord-odd")
    codes = np.arange(params.order, dtype=np.int64)
    return VectorSet(params, codes[(codes % params.m) % 2 == 1])


def build_odd_weight(params: GroupParams) -> VectorSet:
    """All vectors whose coordinate sum is odd (parity taken as integers)."""
    _require_even(params, "odd-weight")
    return VectorSet(params, np.flatnonzero(_parity_of_weight(params)))


def build_odd_box(params: GroupParams) -> VectorSet:
    """{1, 3}^n, the trivial construction of size 2^n."""
    if params.m != 4:
        raise UnsupportedConstruction(f"odd-box is defined for m=4 only, got m={params.m}")
    codes = np.array([0], dtype=np.int64)
    for i in range(params.n):
        place = 4**i
        codes = np.concatenate([codes + place, codes + 3 * place])
    return VectorSet(params, np.sort(codes))


CONSTRUCTIONS = {
    "first-coord-odd": build_first_coord_odd,
    "odd-weight": build_odd_weight,
    "odd-box": build_odd_box,
}
