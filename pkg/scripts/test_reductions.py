#!/usr/bin/env python3
"""
Test script for the instance generators and their witness converters.
"""

import numpy as np
import pytest
from scipy.stats import chisquare

from robust_mst.errors import (
    AssignmentDoesNotSatisfy,
    LabelingNotTotal,
    NotACover,
    ParamsInfeasible,
    ScenarioBlowup,
    SchemaError,
    SolutionUsesForbiddenEdge,
)
from robust_mst.exact import brute_force_minmax, brute_force_regret, optimal_completions
from robust_mst.graphs import connected_components, is_series_parallel, is_spanning_tree
from robust_mst.instances import evaluate_2stage, evaluate_minmax, save_instance
from robust_mst.models import (
    CnfFormula,
    LabelCoverEdge,
    LabelCoverInstance,
    Labeling,
    MinMaxInstance,
    TwoStageInstance,
    TwoStageSolution,
)
from robust_mst.reductions import (
    assignment_to_tree,
    brute_force_satisfiable,
    contradictory_pairs,
    cover_to_solution,
    gen_3sat,
    gen_3sat_with_metadata,
    gen_label_cover,
    gen_label_cover_with_metadata,
    gen_random,
    gen_random_set_cover,
    gen_set_cover,
    gen_set_cover_with_metadata,
    label_cover_scenario_count,
    labeling_to_tree,
    read_dimacs,
    solution_to_cover,
    write_dimacs,
)


@pytest.fixture
def single_edge_lc() -> LabelCoverInstance:
    return LabelCoverInstance(
        num_left=1, num_right=1, num_labels=2,
        edges=[LabelCoverEdge(v=0, w=0, pairs=[(1, 1), (2, 2)])],
    )


@pytest.fixture
def k22_lc() -> LabelCoverInstance:
    """Equality on three edges and a swap on the fourth: no labeling of value 1 exists."""
    equal = [(1, 1), (2, 2)]
    return LabelCoverInstance(
        num_left=2, num_right=2, num_labels=2,
        edges=[
            LabelCoverEdge(v=0, w=0, pairs=equal),
            LabelCoverEdge(v=0, w=1, pairs=equal),
            LabelCoverEdge(v=1, w=0, pairs=equal),
            LabelCoverEdge(v=1, w=1, pairs=[(1, 2), (2, 1)]),
        ],
    )


# Label Cover

def test_label_cover_single_edge_counts(single_edge_lc):
    inst, meta = gen_label_cover_with_metadata(single_edge_lc, g=1)
    assert inst.graph.num_vertices == 5
    assert inst.graph.num_edges == 5
    assert inst.num_scenarios == 3
    assert meta.parameters["raw_scenario_count"] == 5
    assert meta.parameters["scenario_count"] == 3
    assert label_cover_scenario_count(single_edge_lc, 1) == 5
    assert sorted(meta.edge_roles["label"]) == ["1", "3"]
    assert meta.edge_roles["label"]["1"] == [0, 0, 1, 1]
    # The zero scenario comes last
    assert inst.cost_matrix[-1].sum() == 0


def test_label_cover_costs_are_binary(k22_lc):
    inst = gen_label_cover(k22_lc, g=2)
    assert set(np.unique(inst.cost_matrix)) <= {0.0, 1.0}


def test_label_cover_k22_counts_and_gap(k22_lc):
    inst = gen_label_cover(k22_lc, g=2)
    assert inst.graph.num_vertices == 15
    assert inst.graph.num_edges == 18
    assert inst.num_scenarios == 9
    assert brute_force_minmax(inst).value >= 2


def test_labeling_tree_has_value_one(single_edge_lc):
    labeling = Labeling(left={0: frozenset({2})}, right={0: frozenset({2})})
    inst = gen_label_cover(single_edge_lc, g=1)
    tree = labeling_to_tree(single_edge_lc, 1, labeling)
    assert is_spanning_tree(inst.graph, tree)
    assert 3 in tree
    assert evaluate_minmax(inst, tree) <= 1


def test_labeling_must_be_total(k22_lc):
    labeling = Labeling(left={0: frozenset({1}), 1: frozenset({1})}, right={0: frozenset({1}), 1: frozenset({1})})
    with pytest.raises(LabelingNotTotal):
        labeling_to_tree(k22_lc, 2, labeling)


def test_wider_labeling_covers_k22(k22_lc):
    labeling = Labeling(
        left={0: frozenset({1}), 1: frozenset({1})},
        right={0: frozenset({1}), 1: frozenset({1, 2})},
    )
    inst = gen_label_cover(k22_lc, g=2)
    tree = labeling_to_tree(k22_lc, 2, labeling)
    assert is_spanning_tree(inst.graph, tree)
    assert labeling.value == 2


def test_scenario_cap(single_edge_lc):
    with pytest.raises(ScenarioBlowup) as exc:
        gen_label_cover(single_edge_lc, g=1, scenario_cap=2)
    assert exc.value.count == 5
    assert exc.value.cap == 2


def test_single_pair_relation_is_rejected():
    lc = LabelCoverInstance(
        num_left=1, num_right=1, num_labels=1,
        edges=[LabelCoverEdge(v=0, w=0, pairs=[(1, 1)])],
    )
    with pytest.raises(ParamsInfeasible):
        gen_label_cover(lc, g=1)


def test_label_cover_regret_equals_minmax(k22_lc):
    inst = gen_label_cover(k22_lc, g=2)
    assert np.all(inst.scenario_optima == 0)
    assert brute_force_regret(inst).value == brute_force_minmax(inst).value


# 3-SAT

def test_3sat_structure(sat_formula):
    inst, meta = gen_3sat_with_metadata(sat_formula)
    assert inst.graph.num_vertices == 9
    assert inst.graph.num_edges == 12
    assert inst.num_scenarios == 3
    assert len(contradictory_pairs(sat_formula)) == 3
    assert is_series_parallel(inst.graph)
    assert inst.has_negative_costs
    assert meta.parameters == {"num_variables": 3, "num_clauses": 2}
    assert inst.cost_matrix.max() == 7
    assert inst.cost_matrix.min() == -1


def test_assignment_tree_has_value_zero(sat_formula):
    inst = gen_3sat(sat_formula)
    assignment = brute_force_satisfiable(sat_formula)
    assert assignment == {1: False, 2: False, 3: True}
    tree = assignment_to_tree(sat_formula, assignment)
    assert is_spanning_tree(inst.graph, tree)
    assert evaluate_minmax(inst, tree) == 0


def test_unsatisfying_assignment_is_rejected(sat_formula):
    with pytest.raises(AssignmentDoesNotSatisfy):
        assignment_to_tree(sat_formula, {1: False, 2: False, 3: False})


def test_unsatisfiable_formula_detected(unsat_formula):
    assert brute_force_satisfiable(unsat_formula) is None
    inst = gen_3sat(unsat_formula)
    assert inst.graph.num_vertices == 33
    assert inst.num_scenarios == 3 * 16


def _random_formulas(count: int, seed: int):
    rng = np.random.default_rng(seed)
    made = 0
    while made < count:
        clauses = []
        for _ in range(3):
            variables = rng.permutation(3) + 1
            signs = rng.choice([-1, 1], size=3)
            clauses.append((variables * signs).tolist())
        literals = {l for clause in clauses for l in clause}
        if all(x in literals and -x in literals for x in (1, 2, 3)):
            made += 1
            yield CnfFormula(num_variables=3, clauses=clauses)


def test_satisfiable_formulas_reach_zero():
    for phi in _random_formulas(5, seed=3):
        assignment = brute_force_satisfiable(phi)
        assert assignment is not None
        inst = gen_3sat(phi)
        assert evaluate_minmax(inst, assignment_to_tree(phi, assignment)) == 0
        assert brute_force_minmax(inst).value == 0


# Set Cover

def test_set_cover_structure(set_cover_example):
    inst, meta = gen_set_cover_with_metadata(set_cover_example)
    assert isinstance(inst, TwoStageInstance)
    assert inst.graph.num_vertices == 7
    assert inst.graph.num_edges == 21
    assert inst.num_scenarios == 3
    assert inst.graph.edges[:3] == ((0, 6), (1, 6), (2, 6))
    assert list(inst.first_stage_costs[:3]) == [1, 1, 1]
    assert set(inst.first_stage_costs[3:]) == {4}
    assert meta.vertex_roles["root"] == 6


def test_cover_solution_value(set_cover_example):
    inst = gen_set_cover(set_cover_example)
    sol = cover_to_solution(set_cover_example, [0, 1])
    assert sol.e1 == {0, 1}
    assert evaluate_2stage(inst, sol) == 2
    assert solution_to_cover(set_cover_example, sol) == (0, 1)
    full = cover_to_solution(set_cover_example, [0, 1, 2])
    assert evaluate_2stage(inst, full) == 3


def test_not_a_cover(set_cover_example):
    with pytest.raises(NotACover):
        cover_to_solution(set_cover_example, [2])
    with pytest.raises(NotACover):
        cover_to_solution(set_cover_example, [])


def test_forbidden_first_stage_edge(set_cover_example):
    inst = gen_set_cover(set_cover_example)
    # Edge 5 joins subset vertex 0 to element 0
    assert inst.graph.edges[5] == (0, 3)
    e1 = frozenset({0, 1, 5})
    _, completions = optimal_completions(inst, e1)
    with pytest.raises(SolutionUsesForbiddenEdge):
        solution_to_cover(set_cover_example, TwoStageSolution(e1=e1, completions=completions))


def test_random_set_cover_is_valid():
    sc = gen_random_set_cover(num_elements=6, num_subsets=4, seed=9)
    assert sc.covers(range(sc.num_subsets))
    assert sc == gen_random_set_cover(num_elements=6, num_subsets=4, seed=9)


# Random instances

def test_random_instance_replay():
    a = gen_random(7, 12, 3, seed=1)
    b = gen_random(7, 12, 3, seed=1)
    assert save_instance(a) == save_instance(b)
    assert save_instance(a) != save_instance(gen_random(7, 12, 3, seed=2))
    assert isinstance(a, MinMaxInstance)
    assert a.graph.num_edges == 12
    assert len(set(a.graph.edges)) == 12
    assert connected_components(a.graph, range(12))[0] == 1
    assert a.cost_matrix.min() >= 0 and a.cost_matrix.max() <= 9


def test_random_two_stage_instance():
    inst = gen_random(5, 6, 2, cost_range=(1, 3), two_stage=True, seed=4)
    assert isinstance(inst, TwoStageInstance)
    assert inst.first_stage_costs.min() >= 1 and inst.first_stage_costs.max() <= 3


def test_random_costs_are_uniform():
    pooled = []
    for seed in range(20):
        inst = gen_random(7, 15, 4, cost_range=(0, 9), two_stage=True, seed=seed)
        pooled.extend(inst.cost_matrix.ravel().tolist())
        pooled.extend(inst.first_stage_costs.tolist())
    counts = np.bincount(np.asarray(pooled, dtype=np.int64), minlength=10)
    assert len(pooled) == 1500 and len(counts) == 10
    assert counts.min() > 0
    assert chisquare(counts).pvalue > 1e-3


@pytest.mark.parametrize("n, m, k, costs", [(5, 3, 1, (0, 9)), (4, 7, 1, (0, 9)), (4, 4, 0, (0, 9)), (4, 4, 1, (5, 2))])
def test_random_params_infeasible(n, m, k, costs):
    with pytest.raises(ParamsInfeasible):
        gen_random(n, m, k, costs)


# DIMACS

def test_dimacs_round_trip(sat_formula):
    text = "c example\np cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"
    assert read_dimacs(text) == sat_formula
    assert read_dimacs(write_dimacs(sat_formula)) == sat_formula


def test_dimacs_clauses_may_span_lines(sat_formula):
    assert read_dimacs("p cnf 3 2\n1 2\n3 0 -1 -2 -3 0\n") == sat_formula


@pytest.mark.parametrize(
    "text",
    [
        "1 2 3 0\n",
        "p cnf 3 2\n1 2 3 0\n-1 -2 -3\n",
        "p cnf 3 3\n1 2 3 0\n-1 -2 -3 0\n",
        "p dnf 3 2\n1 2 3 0\n-1 -2 -3 0\n",
        "p cnf 3 1\n1 2 3 0\n",
    ],
)
def test_dimacs_errors(text):
    with pytest.raises(SchemaError):
        read_dimacs(text)
