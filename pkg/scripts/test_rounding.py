#!/usr/bin/env python3
"""
Test script for randomized rounding: constants, sampling, both rounding loops and the pipelines.
"""

import math

import numpy as np
import pytest

from conftest import random_corpus, small_two_stage_corpus
from robust_mst.errors import IncompatibleSolution, ParamsInadmissible, RestartsExhausted
from robust_mst.exact import brute_force_2stage, brute_force_minmax
from robust_mst.graphs import is_spanning_tree
from robust_mst.instances import evaluate_2stage, evaluate_minmax, validate_two_stage_solution
from robust_mst.lp import find_min_feasible_C, find_min_feasible_C_2stage
from robust_mst.models import (
    FractionalSolution,
    MinMaxInstance,
    RoundingParams,
    RoundingStatus,
    TwoStageInstance,
)
from robust_mst.reductions import gen_set_cover
from robust_mst.rounding import (
    check_admissible,
    compute_delta_2stage,
    compute_delta_minmax,
    compute_r_2stage,
    compute_r_minmax,
    failure_probability,
    guarantee_bound,
    iterate_minmax_rounding,
    lemma1_bound_multiplier,
    lemma3_bound_multiplier,
    make_rng,
    round_2stage,
    round_minmax,
    sample_edges,
    shrink_fraction,
    solve_2stage_approx,
    solve_minmax_approx,
)
from robust_mst.rounding import pipeline


# Constants

def test_r_minmax_values():
    assert compute_r_minmax(10) == 72
    assert compute_r_minmax(3) == 35
    values = [compute_r_minmax(n) for n in range(2, 5000)]
    assert values == sorted(values)
    with pytest.raises(ValueError):
        compute_r_minmax(1)


def test_r_2stage_values():
    assert compute_r_2stage(10, 5) == 82
    assert compute_r_2stage(10, 1) == 72 == compute_r_minmax(10)
    by_k = [compute_r_2stage(10, k) for k in range(1, 200)]
    assert by_k == sorted(by_k)


def test_deltas():
    delta = compute_delta_minmax()
    assert (1 - delta) * (11 + math.sqrt(21)) == pytest.approx(10.0)
    assert 0 < compute_delta_2stage(10, 5) < 1
    assert compute_delta_2stage(10, 1) == pytest.approx(delta)


def test_bound_multiplier():
    assert lemma1_bound_multiplier(10, 5, 72, 2) == pytest.approx(24.535, abs=1e-3)
    n = 17
    assert lemma1_bound_multiplier(n, 1, 1, 2) == pytest.approx((2 * math.log(n) + 1.5) * 3)
    assert lemma1_bound_multiplier(n, 4, 1, 2) < lemma1_bound_multiplier(n, 8, 1, 2)
    assert lemma1_bound_multiplier(n, 4, 2, 2) < lemma1_bound_multiplier(n, 4, 50, 2)
    assert lemma3_bound_multiplier(10, 5, 72, 2) == lemma1_bound_multiplier(10, 5, 72, 2)


def test_inadmissible_parameters():
    with pytest.raises(ParamsInadmissible):
        check_admissible(2, 10**6, 10**6, 2)
    with pytest.raises(ParamsInadmissible):
        lemma1_bound_multiplier(10, 5, 72, 1.5)
    with pytest.raises(ParamsInadmissible):
        check_admissible(10, 0, 1, 2)


def test_failure_probability_and_guarantee():
    assert failure_probability(10, 1, 2) == pytest.approx(0.1)
    r = compute_r_minmax(7)
    assert guarantee_bound(7, 3, 2.0, 2) == pytest.approx(r * lemma1_bound_multiplier(7, 3, r, 2) * 2.0)


# Sampling

def test_rng_is_keyed():
    a = make_rng(7, 3, 0).random(5)
    assert np.array_equal(a, make_rng(7, 3, 0).random(5))
    assert not np.array_equal(a, make_rng(7, 3, 1).random(5))
    assert not np.array_equal(a, make_rng(7, 4, 0).random(5))
    assert not np.array_equal(a, make_rng(8, 3, 0).random(5))


def test_sampling_extremes():
    rng = make_rng(0, 1)
    mask = sample_edges([0.0, 1.0, 0.0, 1.0], rng)
    assert mask.tolist() == [False, True, False, True]


def test_sampling_marginals():
    p = np.array([0.05, 0.25, 0.5, 0.8, 0.97])
    rng = np.random.default_rng(12345)
    trials = 100_000
    counts = np.zeros_like(p)
    for _ in range(trials):
        counts += sample_edges(p, rng)
    sigma = np.sqrt(trials * p * (1 - p))
    assert np.all(np.abs(counts - trials * p) <= 4 * sigma)


# Min-max rounding

def test_integral_point_returns_its_tree(triangle_two_scenarios):
    x_hat = FractionalSolution(x=[1.0, 0.0, 1.0])
    for seed in range(20):
        outcome = round_minmax(triangle_two_scenarios, x_hat, seed)
        assert outcome.status == RoundingStatus.SUCCESS
        assert outcome.iterations_used == 1
        assert outcome.tree == {0, 2}


def test_zero_point_never_connects(triangle_two_scenarios):
    outcome = round_minmax(triangle_two_scenarios, FractionalSolution(x=[0.0, 0.0, 0.0]), 3)
    assert outcome.status == RoundingStatus.NOT_CONNECTED
    assert outcome.iterations_used == compute_r_minmax(3)


def test_point_length_must_match(triangle_two_scenarios):
    with pytest.raises(IncompatibleSolution):
        round_minmax(triangle_two_scenarios, FractionalSolution(x=[1.0, 1.0]), 0)


def test_triangle_successes_have_value_two(triangle_two_scenarios):
    _, x_hat = find_min_feasible_C(triangle_two_scenarios)
    successes = 0
    for seed in range(1000):
        outcome = round_minmax(triangle_two_scenarios, x_hat, seed)
        if outcome.is_success:
            successes += 1
            assert outcome.value == 2
            assert is_spanning_tree(triangle_two_scenarios.graph, outcome.tree)
    assert successes > 0


def test_iteration_records(triangle_unit):
    x_hat = FractionalSolution(x=[0.5, 0.5, 0.5])
    records = [rec for rec, _ in iterate_minmax_rounding(triangle_unit, x_hat, seed=11)]
    assert [rec.iteration for rec in records] == list(range(1, len(records) + 1))
    for prev, cur in zip(records, records[1:]):
        assert cur.components_before == prev.components_after
        assert cur.components_after <= cur.components_before
    for rec in records:
        assert rec.per_scenario_added_cost == (float(len(rec.sampled)),)
    if records[-1].connected:
        assert all(not rec.connected for rec in records[:-1])


def _lp_samples(count: int):
    for inst in random_corpus(count, base_seed=500):
        c_hat, x_hat = find_min_feasible_C(inst)
        yield inst, c_hat, x_hat


def test_component_shrink_fraction():
    samples = [(inst, x_hat) for inst, _, x_hat in _lp_samples(10)]
    records = []
    seed = 0
    while len(records) < 10_000:
        for inst, x_hat in samples:
            records.extend(rec for rec, _ in iterate_minmax_rounding(inst, x_hat, seed))
        seed += 1
    assert shrink_fraction(records) >= 0.48


def test_per_iteration_cost_bound():
    violations = 0
    total = 0
    worst_allowed = 0.0
    for inst, c_hat, x_hat in _lp_samples(10):
        n = inst.graph.num_vertices
        bound = lemma1_bound_multiplier(n, inst.num_scenarios, 1, 2) * c_hat
        worst_allowed = max(worst_allowed, 1.0 / n)
        for seed in range(100):
            for rec, _ in iterate_minmax_rounding(inst, x_hat, seed):
                total += 1
                if max(rec.per_scenario_added_cost) > bound + 1e-9:
                    violations += 1
    assert violations / total <= worst_allowed + 0.02


# Min-max pipeline

def test_pipeline_replay_is_identical(minmax_corpus):
    inst = minmax_corpus[7]
    params = RoundingParams(seed=7)
    assert solve_minmax_approx(inst, params).model_dump() == solve_minmax_approx(inst, params).model_dump()


def test_pipeline_successes_are_valid(minmax_corpus):
    for inst in minmax_corpus:
        outcome = solve_minmax_approx(inst, RoundingParams(seed=1))
        assert is_spanning_tree(inst.graph, outcome.tree)
        assert outcome.value == evaluate_minmax(inst, outcome.tree)
        assert outcome.value >= outcome.lp_bound * (1 - 1e-5) - 1e-6
        opt = brute_force_minmax(inst).value
        n = inst.graph.num_vertices
        assert outcome.value <= guarantee_bound(n, inst.num_scenarios, opt, 2) + 1e-9


@pytest.mark.slow
def test_pipeline_guarantee_on_large_corpus():
    for inst in random_corpus(200, base_seed=10_000):
        outcome = solve_minmax_approx(inst, RoundingParams(seed=5))
        opt = brute_force_minmax(inst).value
        bound = guarantee_bound(inst.graph.num_vertices, inst.num_scenarios, opt, 2)
        assert outcome.value <= bound + 1e-9, inst.name


def test_single_scenario_integral_point_hits_mst(triangle):
    inst = MinMaxInstance(graph=triangle, scenarios=[[1, 2, 5]])
    outcome = solve_minmax_approx(inst, RoundingParams(seed=0))
    assert outcome.value >= outcome.lp_bound * (1 - 1e-5) - 1e-6
    assert outcome.value == 3


def test_restarts_exhausted(monkeypatch, triangle_two_scenarios):
    seeds = []

    def never_connects(inst, x_hat, seed, r=None):
        seeds.append(seed)
        return pipeline.RoundingOutcome(status=RoundingStatus.NOT_CONNECTED, iterations_used=3, seed=seed)

    monkeypatch.setattr(pipeline, "round_minmax", never_connects)
    with pytest.raises(RestartsExhausted) as exc:
        solve_minmax_approx(triangle_two_scenarios, RoundingParams(seed=2**64 - 1, max_restarts=2))
    assert exc.value.attempts == 3
    assert seeds == [2**64 - 1, 0, 1]
    assert exc.value.last_outcome.lp_bound == pytest.approx(2.0, rel=1e-5)


# 2-stage rounding

def test_integral_two_stage_point(triangle_two_stage):
    point = FractionalSolution(x=[1.0, 0.0, 0.0], second_stage=[[0.0, 1.0, 0.0]])
    for seed in range(10):
        outcome = round_2stage(triangle_two_stage, point, seed)
        assert outcome.is_success
        assert outcome.iterations_used == 1
        assert outcome.solution.e1 == {0}
        assert outcome.solution.completions == {0: frozenset({1})}
        assert outcome.value == 1


def test_two_stage_needs_second_stage_rows(triangle_two_stage):
    with pytest.raises(IncompatibleSolution):
        round_2stage(triangle_two_stage, FractionalSolution(x=[1.0, 0.0, 0.0]), 0)


def test_free_second_stage_rounds_to_zero(triangle):
    inst = TwoStageInstance(graph=triangle, first_stage=[10, 10, 10], scenarios=[[0, 0, 0]])
    point = FractionalSolution(x=[0.0, 0.0, 0.0], second_stage=[[2 / 3, 2 / 3, 2 / 3]])
    successes = 0
    for seed in range(1000):
        outcome = round_2stage(inst, point, seed)
        if outcome.is_success:
            successes += 1
            assert outcome.value == 0
            assert outcome.solution.e1 == frozenset()
    assert successes > 0


def test_set_cover_rounding_respects_optimum(set_cover_example):
    inst = gen_set_cover(set_cover_example)
    _, point = find_min_feasible_C_2stage(inst)
    for seed in range(200):
        outcome = round_2stage(inst, point, seed)
        if outcome.is_success:
            validate_two_stage_solution(inst, outcome.solution)
            assert outcome.value >= 2


def test_two_stage_pipeline_is_valid(two_stage_corpus):
    for inst in two_stage_corpus:
        outcome = solve_2stage_approx(inst, RoundingParams(seed=3))
        sol = outcome.solution
        validate_two_stage_solution(inst, sol)
        assert outcome.value == evaluate_2stage(inst, sol)
        assert outcome.value >= outcome.lp_bound * (1 - 1e-5) - 1e-6
        for s in range(inst.num_scenarios):
            assert not (sol.e1 & sol.completions[s])
            assert is_spanning_tree(inst.graph, sol.tree_for(s))


def test_two_stage_pipeline_at_least_optimum(two_stage_corpus):
    for inst in [i for i in two_stage_corpus if i.graph.num_edges <= 12]:
        outcome = solve_2stage_approx(inst, RoundingParams(seed=4))
        assert outcome.value >= brute_force_2stage(inst).value - 1e-9


def _succeeds_with_restarts(round_fn, inst, point, seed: int, max_restarts: int = 3) -> bool:
    return any(round_fn(inst, point, seed + k).is_success for k in range(max_restarts + 1))


def test_minmax_success_rate(minmax_corpus):
    attempts = successes = 0
    for inst in minmax_corpus:
        _, x_hat = find_min_feasible_C(inst)
        for seed in range(0, 80, 4):
            attempts += 1
            successes += _succeeds_with_restarts(round_minmax, inst, x_hat, seed)
    assert successes / attempts >= 0.95


def test_two_stage_success_rate(two_stage_corpus):
    attempts = successes = 0
    for inst in two_stage_corpus:
        _, point = find_min_feasible_C_2stage(inst)
        for seed in range(0, 80, 4):
            attempts += 1
            successes += _succeeds_with_restarts(round_2stage, inst, point, seed)
    assert successes / attempts >= 0.90


@pytest.fixture
def memoized_lp_bounds(monkeypatch):
    """Compute each instance's LP bound once per test."""

    def memoize(fn):
        results = {}

        def wrapper(inst, *args):
            if id(inst) not in results:
                results[id(inst)] = fn(inst, *args)
            return results[id(inst)]

        return wrapper

    monkeypatch.setattr(pipeline, "find_min_feasible_C", memoize(find_min_feasible_C))
    monkeypatch.setattr(pipeline, "find_min_feasible_C_2stage", memoize(find_min_feasible_C_2stage))


@pytest.mark.slow
def test_rounding_guarantee_on_acceptance_corpus(acceptance_corpus, acceptance_optima, memoized_lp_bounds):
    attempts = successes = 0
    for inst, opt in zip(acceptance_corpus, acceptance_optima):
        n, k = inst.graph.num_vertices, inst.num_scenarios
        r = compute_r_minmax(n)
        bound = r * lemma1_bound_multiplier(n, k, r, 2) * opt
        for seed in range(0, 80, 4):
            attempts += 1
            try:
                outcome = solve_minmax_approx(inst, RoundingParams(seed=seed, max_restarts=3))
            except RestartsExhausted:
                continue
            successes += 1
            assert outcome.value <= bound + 1e-9, (inst.name, seed)
    assert attempts == 4000
    assert successes / attempts >= 0.95


@pytest.mark.slow
def test_two_stage_rounding_on_acceptance_corpus(memoized_lp_bounds):
    corpus = small_two_stage_corpus(50)
    attempts = successes = 0
    for inst in corpus:
        assert inst.graph.num_edges <= 12 and inst.num_scenarios <= 3
        for seed in range(0, 80, 4):
            attempts += 1
            try:
                outcome = solve_2stage_approx(inst, RoundingParams(seed=seed, max_restarts=3))
            except RestartsExhausted:
                continue
            successes += 1
            validate_two_stage_solution(inst, outcome.solution)
            assert outcome.value == pytest.approx(evaluate_2stage(inst, outcome.solution))
            # C_hat sits above the LP optimum by at most the bisection tolerance
            assert outcome.value >= outcome.lp_bound * (1 - 1e-5) - 1e-6, (inst.name, seed)
    assert successes / attempts >= 0.90
