"""Pair-counting upper bound on the size of a 3-zero-sum-free set.

Every ordered pair of distinct members x, y forbids -(x+y) from H, and each
non-member z is hit by at most |H| ordered pairs. So
|H|^2 - |H| <= (|G| - |H|) |H|, i.e. |H| <= |G| / 2. Only the m = 4 value
is treated as authoritative.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .group import GroupParams
from .sets import VectorSet, density


class BoundInconsistency(RuntimeError):
    """A set claimed free is larger than the proven bound."""


@dataclass(frozen=True)
class BoundReport:
    group_order: int
    upper_bound: int
    achieved_by_construction: bool
    authoritative: bool = True

    @property
    def label(self) -> str:
        return "proven" if self.authoritative else "heuristic estimate"


def pair_counting_bound(params: GroupParams) -> BoundReport:
    order = params.order
    if params.m == 4:
        return BoundReport(order, order // 2, True, True)
    warnings.warn(
        f"pair-counting bound is only proven tight for m=4; m={params.m} value is an estimate",
        stacklevel=2,
    )
    # the odd-coordinate family reaches order/2 for every even modulus
    return BoundReport(order, (order + 1) // 2, params.m % 2 == 0, False)


def gap_to_bound(H: VectorSet) -> tuple[int, float]:
    """Return (bound - |H|, bound density - density of H)."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = pair_counting_bound(H.params)
    gap = rep.upper_bound - len(H)
    if gap < 0 and rep.authoritative:
        raise BoundInconsistency(
            f"|H| = {len(H)} exceeds the bound {rep.upper_bound} for {H.params}"
        )
    return gap, rep.upper_bound / rep.group_order - float(density(H))
