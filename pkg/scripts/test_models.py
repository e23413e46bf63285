#!/usr/bin/env python3
"""
Test script for Pydantic models: validation, coercion and helpers.
"""

import pytest
from pydantic import ValidationError

from robust_mst.errors import DisconnectedGraph, RowLengthMismatch
from robust_mst.models import (
    CnfFormula,
    FractionalSolution,
    Graph,
    LabelCoverEdge,
    LabelCoverInstance,
    Labeling,
    MinMaxInstance,
    RoundingParams,
    SetCoverInstance,
    SolutionReport,
    TwoStageInstance,
    TwoStageSolution,
    edge_set,
)


def test_graph_validation():
    graph = Graph(num_vertices=3, edges=[[0, 1], [1, 2]])
    assert graph.edges == ((0, 1), (1, 2))
    assert graph.cut_edges(frozenset({0})) == [0]
    with pytest.raises(ValidationError):
        Graph(num_vertices=2, edges=[(0, 2)])
    with pytest.raises(ValidationError):
        Graph(num_vertices=2, edges=[(1, 1)])


def test_models_are_frozen(triangle):
    with pytest.raises(ValidationError):
        triangle.num_vertices = 4


def test_instance_properties(triangle_two_scenarios, triangle_two_stage):
    assert triangle_two_scenarios.num_scenarios == 2
    assert triangle_two_scenarios.c_max == 2
    assert not triangle_two_scenarios.is_two_stage
    assert triangle_two_scenarios.cost_matrix.shape == (2, 3)
    assert list(triangle_two_scenarios.scenario_optima) == [0, 0]
    assert triangle_two_stage.is_two_stage
    assert triangle_two_stage.c_max == 1


def test_instance_row_checks(triangle):
    with pytest.raises(RowLengthMismatch):
        MinMaxInstance(graph=triangle, scenarios=[[1, 1]])
    with pytest.raises(RowLengthMismatch):
        TwoStageInstance(graph=triangle, first_stage=[1, 1], scenarios=[[1, 1, 1]])
    with pytest.raises(ValidationError):
        MinMaxInstance(graph=triangle, scenarios=[])
    with pytest.raises(DisconnectedGraph):
        MinMaxInstance(graph=Graph(num_vertices=3, edges=[(0, 1)]), scenarios=[[1]])


def test_fractional_solution_clips():
    sol = FractionalSolution.from_arrays([1.0000001, -1e-9, 0.5])
    assert sol.x == (1.0, 0.0, 0.5)
    assert not sol.has_second_stage


def test_two_stage_solution_tree():
    sol = TwoStageSolution(e1=edge_set([0]), completions={0: edge_set([2])})
    assert sol.tree_for(0) == {0, 2}
    assert sol.tree_for(1) == {0}


def test_rounding_params_ranges():
    assert RoundingParams().rho1 == 2.0
    with pytest.raises(ValidationError):
        RoundingParams(rho1=1.0)
    with pytest.raises(ValidationError):
        RoundingParams(seed=2**64)


def test_report_seed_range():
    report = SolutionReport(algorithm="lp-round-2stage", first_stage_edges=[0], completions={"0": [1]})
    assert report.completions == {"0": [1]}
    with pytest.raises(ValidationError):
        SolutionReport(algorithm="baseline", seed=2**64)


def test_label_cover_validation():
    edge = LabelCoverEdge(v=0, w=0, pairs=[(2, 2), (1, 1), (1, 1)])
    assert edge.pairs == ((1, 1), (2, 2))
    with pytest.raises(ValidationError):
        LabelCoverInstance(num_left=1, num_right=1, num_labels=1, edges=[edge])
    lc = LabelCoverInstance(num_left=1, num_right=2, num_labels=2, edges=[edge])
    assert lc.get_left_components(0) == [0]
    assert lc.get_right_components(1) == []
    assert Labeling(left={0: frozenset({1, 2})}).value == 2


def test_cnf_validation(sat_formula):
    assert sat_formula.num_clauses == 2
    assert sat_formula.is_satisfied_by({1: True, 2: False, 3: False})
    with pytest.raises(ValidationError):
        CnfFormula(num_variables=3, clauses=[[1, 2, 3]])
    with pytest.raises(ValidationError):
        CnfFormula(num_variables=2, clauses=[[1, 1, -2], [-1, 2, 2]])


def test_set_cover_validation(set_cover_example):
    assert set_cover_example.num_subsets == 3
    assert set_cover_example.covers([0, 2])
    assert not set_cover_example.covers([0])
    with pytest.raises(ValidationError):
        SetCoverInstance(num_elements=3, subsets=[[0, 1]])
    with pytest.raises(ValidationError):
        SetCoverInstance(num_elements=1, subsets=[[0, 1]])
