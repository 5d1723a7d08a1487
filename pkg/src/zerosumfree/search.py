"""Hybrid greedy-genetic search for large 3-zero-sum-free sets.

Greedy construction ranks every group element by a priority that favours
vectors with many coordinates equal to 2, then admits elements one at a
time through the blocked table. A memetic loop (tournament selection,
uniform set crossover, stratified mutation, penalised fitness, greedy repair)
refines a population of such seeds.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .group import GroupParams, digits
from .sets import VectorSet
from .verify import BlockedTable, count_violations, verify_pairwise, violating_triples


@dataclass(frozen=True)
class PriorityWeights:
    w_two: float = 1.0
    w_parity: float = 1.0
    w_noise: float = 0.1


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 1
    population_size: int = 32
    generations: int = 200
    mutation_rate: float = 0.02
    greedy_restarts: int = 8
    priority_weights: PriorityWeights = field(default_factory=PriorityWeights)
    time_budget: float = 600.0
    violation_penalty: float = 3.0
    tournament_size: int = 2
    strata_rounds: int = 1
    workers: int = 1

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError("mutation_rate must lie in [0, 1]")
        if self.violation_penalty <= 0:
            raise ValueError("violation_penalty must be > 0")
        if isinstance(self.priority_weights, dict):
            object.__setattr__(self, "priority_weights", PriorityWeights(**self.priority_weights))

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class SearchReport:
    best: VectorSet
    best_size: int
    history: list[tuple[int, int, float]]
    elapsed: float
    config_echo: SearchConfig

    def to_dict(self) -> dict:
        return {
            "modulus": self.best.params.m,
            "dimension": self.best.params.n,
            "best_size": self.best_size,
            "elapsed": self.elapsed,
            "config": self.config_echo.to_dict(),
            "history": [list(h) for h in self.history],
        }


def _twos_and_parity(codes, params: GroupParams):
    d = digits(codes, params)
    return (d == 2).sum(axis=-1), d.sum(axis=-1) % 2


def priority_score(v: int, weights: PriorityWeights, draw: float, params: GroupParams) -> float:
    twos, parity = _twos_and_parity(np.int64(v), params)
    return float(weights.w_two * twos + weights.w_parity * parity + weights.w_noise * draw)


def priority_scores(params: GroupParams, weights: PriorityWeights, draws: np.ndarray) -> np.ndarray:
    twos, parity = _twos_and_parity(np.arange(params.order), params)
    return weights.w_two * twos + weights.w_parity * parity + weights.w_noise * draws


def greedy_build(
    params: GroupParams,
    config: SearchConfig = SearchConfig(),
    rng: Optional[np.random.Generator] = None,
    weights: Optional[PriorityWeights] = None,
) -> VectorSet:
    rng = rng if rng is not None else np.random.default_rng(config.seed)
    weights = weights or config.priority_weights
    bt = BlockedTable(params)
    scores = priority_scores(params, weights, rng.random(params.order))
    # stable sort: equal scores fall back to ascending code
    for v in np.argsort(-scores, kind="stable"):
        if bt.can_add(int(v)):
            bt.insert(int(v))
    H = bt.to_set()
    if not verify_pairwise(H).is_free:
        raise AssertionError("greedy construction produced a violating set")
    return H


def _strata(params: GroupParams) -> list[np.ndarray]:
    twos, _ = _twos_and_parity(np.arange(params.order), params)
    return [np.flatnonzero(twos == k) for k in range(params.n + 1)]


def mutate(
    H: VectorSet,
    config: SearchConfig,
    rng: np.random.Generator,
    rounds: Optional[int] = None,
    strata: Optional[list[np.ndarray]] = None,
) -> VectorSet:
    """Drop members at ``mutation_rate``, then add one uniform draw per 2-count stratum per round."""
    rounds = config.strata_rounds if rounds is None else rounds
    keep = rng.random(len(H)) >= config.mutation_rate
    codes = [int(c) for c in H.codes[keep]]
    if rounds:
        present = set(codes)
        for _ in range(rounds):
            for stratum in strata if strata is not None else _strata(H.params):
                free = [int(c) for c in stratum if int(c) not in present]
                if free:
                    c = free[int(rng.integers(len(free)))]
                    present.add(c)
                    codes.append(c)
    return VectorSet(H.params, codes)


def repair(H: VectorSet) -> VectorSet:
    """Remove the member in the most violating triples (ties: highest code) until free."""
    T = violating_triples(H)
    if len(T) == 0:
        return H
    order = H.params.order
    counts = np.bincount(T.ravel(), minlength=order)
    alive = np.ones(len(T), dtype=bool)
    removed = np.zeros(order, dtype=bool)
    while alive.any():
        top = counts.max()
        u = int(np.flatnonzero(counts == top)[-1])
        rows = alive & (T == u).any(axis=1)
        counts -= np.bincount(T[rows].ravel(), minlength=order)
        alive &= ~rows
        removed[u] = True
    return VectorSet(H.params, H.codes[~removed[H.codes]])


def complete(H: VectorSet, order: np.ndarray) -> VectorSet:
    """Greedily extend a free set by every admissible element, scanned in ``order``."""
    bt = BlockedTable.from_set(H)
    for v in order:
        v = int(v)
        if bt.can_add(v):
            bt.insert(v)
    return bt.to_set()


def _crossover(a: VectorSet, b: VectorSet, rng: np.random.Generator) -> VectorSet:
    ka = a.codes[rng.random(len(a)) < 0.5]
    kb = b.codes[rng.random(len(b)) < 0.5]
    kb = kb[~np.isin(kb, ka)]
    return VectorSet(a.params, np.concatenate([ka, kb]))


def _member_rng(seed: int, generation: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, generation, index])


def evolve(params: GroupParams, config: SearchConfig = SearchConfig()) -> SearchReport:
    """Run the memetic search; the reported best is re-verified before returning.

    Each generation: tournament selection, uniform set crossover, stratified
    mutation, repair, greedy completion in a member-specific random order,
    and elitism. Every member draws from its own stream keyed on
    (seed, generation, index), so results do not depend on ``workers``.
    """
    t0 = time.perf_counter()
    lam = config.violation_penalty
    strata = _strata(params)
    pool = ThreadPoolExecutor(config.workers) if config.workers > 1 else None

    def pmap(fn, items):
        return list(pool.map(fn, items)) if pool else [fn(x) for x in items]

    def fitness_of(H: VectorSet) -> float:
        return len(H) - lam * count_violations(H)

    base = config.priority_weights

    def seed_one(i):
        rng = _member_rng(config.seed, 0, i)
        j = rng.uniform(0.5, 2.0, size=3)
        w = PriorityWeights(base.w_two * j[0], base.w_parity * j[1], base.w_noise * j[2])
        return greedy_build(params, config, rng, w)

    try:
        seeds = pmap(seed_one, range(config.greedy_restarts))
        seeds.sort(key=len, reverse=True)
        population = seeds[: config.population_size]
        k = 0
        while len(population) < config.population_size:
            rng = _member_rng(config.seed, 0, config.greedy_restarts + k)
            population.append(mutate(seeds[k % len(seeds)], config, rng, strata=strata))
            k += 1
        fitness = np.array(pmap(fitness_of, population))
        best = max(seeds, key=len)
        history = [(0, len(best), float(fitness.mean()))]

        for gen in range(1, config.generations + 1):
            if time.perf_counter() - t0 > config.time_budget:
                break
            coord = _member_rng(config.seed, gen, 2**32 - 1)
            elite = int(np.argmax(fitness))

            def pick():
                idx = coord.integers(len(population), size=config.tournament_size)
                return population[int(idx[np.argmax(fitness[idx])])]

            parents = [(pick(), pick()) for _ in range(config.population_size - 1)]

            def breed(i):
                rng = _member_rng(config.seed, gen, i)
                a, b = parents[i]
                child = mutate(_crossover(a, b, rng), config, rng, strata=strata)
                child = complete(repair(child), rng.permutation(params.order))
                return child, fitness_of(child)

            bred = pmap(breed, range(len(parents)))
            population = [population[elite]] + [c for c, _ in bred]
            fitness = np.array([fitness[elite]] + [f for _, f in bred])
            for c, _ in bred:
                if len(c) > len(best):
                    best = c
            history.append((gen, len(best), float(fitness.mean())))
    finally:
        if pool:
            pool.shutdown()

    best = repair(best)
    if not verify_pairwise(best).is_free:
        raise AssertionError("search produced a violating best set")
    return SearchReport(best, len(best), history, time.perf_counter() - t0, config)
