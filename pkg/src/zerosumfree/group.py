"""Packed arithmetic on (Z/mZ)^n.

A vector is stored as a single integer code: coordinate 1 is the least
significant base-m digit. For m = 4 every digit occupies exactly two bits,
which allows carry-free vectorised addition on whole codes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

MAX_ORDER = 2**40


class InvalidInput(ValueError):
    """Raised for out-of-range coordinates, codes or group parameters."""


@dataclass(frozen=True)
class GroupParams:
    modulus: int
    dimension: int

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidInput(f"modulus must be >= 2, got {self.modulus}")
        if self.dimension < 1:
            raise InvalidInput(f"dimension must be >= 1, got {self.dimension}")
        if self.modulus**self.dimension > MAX_ORDER:
            raise InvalidInput(
                f"group order {self.modulus}^{self.dimension} exceeds 2^40"
            )

    @property
    def m(self) -> int:
        return self.modulus

    @property
    def n(self) -> int:
        return self.dimension

    @cached_property
    def order(self) -> int:
        return self.modulus**self.dimension

    @cached_property
    def powers(self) -> np.ndarray:
        return self.modulus ** np.arange(self.dimension, dtype=np.int64)

    def __str__(self):
        return f"(Z/{self.modulus}Z)^{self.dimension}"


def encode(coords: Sequence[int], params: GroupParams) -> int:
    if len(coords) != params.n:
        raise InvalidInput(f"expected {params.n} coordinates, got {len(coords)}")
    code = 0
    for c in reversed(coords):
        c = int(c)
        if not 0 <= c < params.m:
            raise InvalidInput(f"coordinate {c} outside [0, {params.m})")
        code = code * params.m + c
    return code


def _check(code: int, params: GroupParams) -> int:
    if not 0 <= code < params.order:
        raise InvalidInput(f"code {code} outside [0, {params.order})")
    return code


def decode(code: int, params: GroupParams) -> list[int]:
    _check(code, params)
    out = []
    for _ in range(params.n):
        code, d = divmod(code, params.m)
        out.append(d)
    return out


def add(a: int, b: int, params: GroupParams) -> int:
    _check(a, params)
    _check(b, params)
    if params.m == 4:
        return _add4(a, b, _low_mask(params.n))
    m, p, out = params.m, 1, 0
    for _ in range(params.n):
        a, da = divmod(a, m)
        b, db = divmod(b, m)
        out += ((da + db) % m) * p
        p *= m
    return out


def neg(a: int, params: GroupParams) -> int:
    _check(a, params)
    if params.m == 4:
        return _neg4(a, _low_mask(params.n))
    m, p, out = params.m, 1, 0
    for _ in range(params.n):
        a, d = divmod(a, m)
        out += (-d % m) * p
        p *= m
    return out


def zero(params: GroupParams) -> int:
    return 0


def enumerate_group(params: GroupParams) -> Iterator[int]:
    return iter(range(params.order))


# --- m = 4 bit tricks -------------------------------------------------------

def _low_mask(n: int) -> int:
    # 0b0101...01 over 2n bits: the low bit of every digit
    return int("01" * n, 2)


def _add4(a, b, low):
    s = a ^ b
    carry = (a & b & low) << 1
    return (s & low) | ((s ^ carry) & (low << 1))


def _neg4(a, low):
    # digit d -> -d mod 4 flips the high bit exactly when the low bit is set
    return a ^ ((a & low) << 1)


# --- vectorised helpers -----------------------------------------------------

def digits(codes: np.ndarray, params: GroupParams) -> np.ndarray:
    """Decode an array of codes into an (len, n) digit matrix."""
    codes = np.asarray(codes, dtype=np.int64)
    return (codes[..., None] // params.powers) % params.m


def from_digits(d: np.ndarray, params: GroupParams) -> np.ndarray:
    return (np.asarray(d, dtype=np.int64) * params.powers).sum(axis=-1)


class NegSum:
    """Vectorised z = -(x + y) for broadcastable arrays of codes.

    Uses the carry-free bit trick for m = 4 and base-m digit arithmetic
    otherwise.
    """

    def __init__(self, params: GroupParams):
        self.params = params
        self._low = np.int64(_low_mask(params.n)) if params.m == 4 else None

    def __call__(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self._low is not None:
            return _neg4(_add4(x, y, self._low), self._low)
        p = self.params
        dx = digits(x, p)
        dy = digits(y, p)
        return from_digits((-(dx + dy)) % p.m, p)

    def neg(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if self._low is not None:
            return _neg4(x, self._low)
        return from_digits((-digits(x, self.params)) % self.params.m, self.params)
