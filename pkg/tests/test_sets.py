import itertools
from fractions import Fraction

import numpy as np
import pytest

from zerosumfree.group import GroupParams, InvalidInput, decode
from zerosumfree.sets import (
    DuplicateMember,
    Membership,
    UnsupportedConstruction,
    VectorSet,
    build_first_coord_odd,
    build_odd_box,
    build_odd_weight,
    density,
)
from zerosumfree.verify import verify_pairwise


def G(m, n):
    return GroupParams(m, n)


def test_first_coord_odd_small():
    assert build_first_coord_odd(G(4, 1)).vectors() == [[1], [3]]


@pytest.mark.parametrize("n,size", [(5, 512), (10, 524288)])
def test_first_coord_odd_sizes(n, size):
    H = build_first_coord_odd(G(4, n))
    assert len(H) == size
    assert density(H) == Fraction(1, 2)


def test_odd_weight_examples():
    assert build_odd_weight(G(4, 1)).vectors() == [[1], [3]]
    brute = sum(1 for v in itertools.product(range(4), repeat=2) if sum(v) % 2 == 1)
    assert brute == 8
    assert len(build_odd_weight(G(4, 2))) == brute
    assert len(build_odd_weight(G(4, 6))) == 2048


def test_odd_weight_matches_definition():
    p = G(4, 3)
    expected = [v for v in itertools.product(range(4), repeat=3) if sum(v) % 2]
    got = {tuple(v) for v in build_odd_weight(p).vectors()}
    assert got == set(expected)


def test_odd_box():
    assert build_odd_box(G(4, 1)).vectors() == [[1], [3]]
    assert len(build_odd_box(G(4, 5))) == 32
    assert sorted(build_odd_box(G(4, 2)).vectors()) == [[1, 1], [1, 3], [3, 1], [3, 3]]


def test_density_examples():
    assert density(VectorSet(G(4, 3), [])) == 0
    assert density(build_odd_box(G(4, 5))) == Fraction(32, 1024)


def test_constructions_reject_wrong_modulus():
    for build in (build_first_coord_odd, build_odd_weight):
        with pytest.raises(UnsupportedConstruction):
            build(G(3, 2))
    with pytest.raises(UnsupportedConstruction):
        build_odd_box(G(6, 2))


@pytest.mark.parametrize("n", range(1, 11))
def test_construction_sizes_agree(n):
    p = G(4, n)
    assert len(build_first_coord_odd(p)) == len(build_odd_weight(p)) == 4**n // 2


@pytest.mark.parametrize("n", range(1, 8))
def test_constructions_free(n):
    p = G(4, n)
    for H in (build_first_coord_odd(p), build_odd_weight(p)):
        r = verify_pairwise(H)
        assert r.is_free and r.witness is None


@pytest.mark.parametrize("n", range(1, 8))
def test_odd_box_inside_first_coord_odd(n):
    p = G(4, n)
    assert build_odd_box(p).issubset(build_first_coord_odd(p))


def test_odd_box_not_inside_odd_weight():
    p = G(4, 2)
    assert not build_odd_box(p).issubset(build_odd_weight(p))


@pytest.mark.parametrize("m,n", [(2, 5), (6, 3), (8, 2)])
def test_general_even_modulus(m, n):
    p = G(m, n)
    H = build_first_coord_odd(p)
    assert len(H) == (m // 2) * m ** (n - 1)
    assert all(v[0] % 2 == 1 for v in H.vectors())
    assert verify_pairwise(H).is_free
    assert verify_pairwise(build_odd_weight(p)).is_free


def test_constructions_ascending():
    for build in (build_first_coord_odd, build_odd_weight, build_odd_box):
        codes = build(G(4, 4)).codes
        assert np.all(np.diff(codes) > 0)


def test_vectorset_invariants():
    p = G(4, 2)
    with pytest.raises(DuplicateMember):
        VectorSet(p, [1, 2, 1])
    with pytest.raises(InvalidInput):
        VectorSet(p, [16])
    H = VectorSet(p, [5, 1, 9])
    assert list(H) == [5, 1, 9]
    assert 9 in H and 2 not in H
    assert H == VectorSet(p, [1, 9, 5])
    assert H != VectorSet(G(4, 3), [1, 9, 5])


def test_membership_table_and_hash_agree():
    p = G(4, 6)
    H = build_odd_weight(p)
    rng = np.random.default_rng(0)
    q = rng.integers(p.order, size=5000)
    table = Membership(p, H.codes)
    hashed = Membership(p, H.codes, force_hash=True)
    assert table.table is not None and hashed.table is None
    assert np.array_equal(table.many(q), hashed.many(q))
    assert all((int(c) in table) == (int(c) in hashed) for c in q[:200])
