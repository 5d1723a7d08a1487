import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zerosumfree.group import GroupParams, encode
from zerosumfree.sets import VectorSet, build_first_coord_odd, build_odd_weight
from zerosumfree.search import (
    PriorityWeights,
    SearchConfig,
    complete,
    evolve,
    greedy_build,
    mutate,
    priority_score,
    repair,
)
from zerosumfree.verify import count_violations, verify_naive_oracle, verify_pairwise


def test_priority_examples():
    p = GroupParams(4, 3)
    assert priority_score(encode([2, 2, 2], p), PriorityWeights(1, 0, 0), 0.7, p) == 3
    assert priority_score(encode([1, 0, 0], p), PriorityWeights(0, 1, 0), 0.7, p) == 1
    assert priority_score(encode([0, 0, 0], p), PriorityWeights(1, 1, 0), 0.7, p) == 0
    assert priority_score(encode([0, 0, 0], p), PriorityWeights(0, 0, 2), 0.25, p) == 0.5


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(population_size=1)
    with pytest.raises(ValueError):
        SearchConfig(mutation_rate=1.5)
    with pytest.raises(ValueError):
        SearchConfig(violation_penalty=0)
    assert SearchConfig(priority_weights={"w_two": 2, "w_parity": 0, "w_noise": 0}).priority_weights.w_two == 2


def test_greedy_parity_priority_gives_odd_weight_set():
    p = GroupParams(4, 5)
    H = greedy_build(p, SearchConfig(priority_weights=PriorityWeights(0, 1, 0)))
    assert len(H) == 512
    assert H == build_odd_weight(p)


def test_greedy_z4():
    # distinct-triple semantics: Z/4 admits {0, 1, 2}, so greedy can exceed 2
    p = GroupParams(4, 1)
    for w in [(1, 0, 0), (0, 1, 0), (1, 1, 0.1), (0, 0, 1)]:
        H = greedy_build(p, SearchConfig(priority_weights=PriorityWeights(*w)))
        assert len(H) >= 2 and verify_naive_oracle(H).is_free
    H = greedy_build(p, SearchConfig(priority_weights=PriorityWeights(0, 1, 0)))
    # odd codes first, then 0 is blocked by {1, 3} while 2 is not: 1 + 2 + 3 = 6 = 2 (mod 4)
    assert H.sorted().vectors() == [[1], [2], [3]]


def test_greedy_two_heavy_baseline_regression():
    p = GroupParams(4, 5)
    cfg = SearchConfig(seed=1, priority_weights=PriorityWeights(1, 0, 0.01))
    H = greedy_build(p, cfg)
    assert len(H) == 171
    assert greedy_build(p, cfg) == H


def test_greedy_base_weights():
    H = greedy_build(GroupParams(4, 5), SearchConfig(seed=1))
    assert len(H) == 176


@given(
    w=st.tuples(*[st.floats(0, 5, allow_nan=False)] * 3),
    n=st.integers(1, 4),
    seed=st.integers(0, 2**32 - 1),
)
@settings(max_examples=200)
def test_greedy_always_free(w, n, seed):
    p = GroupParams(4, n)
    H = greedy_build(p, SearchConfig(seed=seed), np.random.default_rng(seed), PriorityWeights(*w))
    assert verify_pairwise(H).is_free
    # greedy output is maximal: nothing else can be added
    assert len(complete(H, np.arange(p.order))) == len(H)


def test_mutate_identity_and_empty():
    H = build_first_coord_odd(GroupParams(4, 2))
    rng = np.random.default_rng(0)
    assert mutate(H, SearchConfig(mutation_rate=0), rng, rounds=0) == H
    assert len(mutate(H, SearchConfig(mutation_rate=1), rng, rounds=0)) == 0


def test_mutate_golden():
    H = build_first_coord_odd(GroupParams(4, 2))
    out = mutate(H, SearchConfig(mutation_rate=0.02), np.random.default_rng(42))
    assert list(out) == [1, 3, 5, 7, 9, 11, 13, 15, 4, 2, 10]
    out = mutate(H, SearchConfig(mutation_rate=0.5), np.random.default_rng(42))
    assert list(out) == [1, 5, 7, 11, 13, 15, 4, 2, 10]


def test_mutate_one_draw_per_stratum():
    p = GroupParams(4, 3)
    H = VectorSet(p, [])
    out = mutate(H, SearchConfig(mutation_rate=0), np.random.default_rng(1), rounds=2)
    twos = sorted(v.count(2) for v in out.vectors())
    # the all-2 stratum has a single element, exhausted after the first round
    assert twos == [0, 0, 1, 1, 2, 2, 3]


def test_repair_examples():
    p = GroupParams(4, 1)
    free = VectorSet(p, [1, 3])
    assert repair(free) == free
    assert repair(VectorSet(p, [0, 1, 3])).sorted().vectors() == [[0], [1]]
    full = repair(VectorSet(p, range(4)))
    assert len(full) >= 2 and verify_pairwise(full).is_free
    assert full.sorted().vectors() == [[0], [1], [2]]


@given(st.data())
@settings(max_examples=100)
def test_repair_frees_and_terminates(data):
    m = data.draw(st.sampled_from([3, 4]))
    n = data.draw(st.integers(1, 3))
    p = GroupParams(m, n)
    codes = data.draw(st.lists(st.integers(0, p.order - 1), unique=True, max_size=40))
    H = VectorSet(p, codes)
    R = repair(H)
    assert R.issubset(H)
    assert verify_naive_oracle(R).is_free
    assert len(H) - len(R) <= count_violations(H)


def test_evolve_small():
    r = evolve(GroupParams(4, 3), SearchConfig(seed=1, generations=20))
    assert r.best_size == len(r.best) == 32
    assert verify_pairwise(r.best).is_free
    sizes = [h[1] for h in r.history]
    assert sizes == sorted(sizes)
    assert r.history[0][0] == 0 and len(r.history) == 21


def test_evolve_no_generations_echoes_best_seed():
    p = GroupParams(4, 4)
    cfg = SearchConfig(seed=3, population_size=2, generations=0)
    r = evolve(p, cfg)
    assert len(r.history) == 1
    assert r.config_echo == cfg
    from zerosumfree.search import _member_rng
    seeds = []
    for i in range(cfg.greedy_restarts):
        rng = _member_rng(3, 0, i)
        j = rng.uniform(0.5, 2.0, size=3)
        seeds.append(greedy_build(p, cfg, rng, PriorityWeights(j[0], j[1], 0.1 * j[2])))
    assert r.best_size == max(len(s) for s in seeds)


def test_evolve_deterministic_across_workers():
    p = GroupParams(4, 4)
    a = evolve(p, SearchConfig(seed=5, generations=5, workers=1))
    b = evolve(p, SearchConfig(seed=5, generations=5, workers=1))
    c = evolve(p, SearchConfig(seed=5, generations=5, workers=3))
    assert a.history == b.history == c.history
    assert list(a.best) == list(b.best) == list(c.best)


def test_evolve_cap_set_mode():
    r = evolve(GroupParams(3, 3), SearchConfig(seed=2, generations=30))
    assert r.best_size == 9


def test_evolve_time_budget():
    r = evolve(GroupParams(4, 4), SearchConfig(generations=10_000, time_budget=0.0))
    assert len(r.history) == 1


def test_report_dict():
    r = evolve(GroupParams(4, 2), SearchConfig(generations=2))
    d = r.to_dict()
    assert d["best_size"] == r.best_size and d["config"]["seed"] == 1
    assert d["config"]["priority_weights"] == {"w_two": 1.0, "w_parity": 1.0, "w_noise": 0.1}
