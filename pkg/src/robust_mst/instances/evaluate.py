"""
Objective evaluators for min-max, min-max regret and 2-stage solutions.
"""

from typing import Iterable

import numpy as np

from ..errors import InvalidTwoStageSolution, NotASpanningTree
from ..graphs.spanning import connected_components, is_spanning_tree, kruskal_mst
from ..models.base import EdgeSet
from ..models.instance import MinMaxInstance, TwoStageInstance
from ..models.solution import TwoStageSolution


def _require_tree(inst, t: EdgeSet) -> list:
    if not is_spanning_tree(inst.graph, t):
        raise NotASpanningTree(f"edge set of size {len(t)} is not a spanning tree")
    return sorted(t)


def scenario_costs(inst: MinMaxInstance, t: Iterable[int]) -> np.ndarray:
    """Per-scenario cost of an edge set, as a length-K vector."""
    idx = sorted(t)
    if not idx:
        return np.zeros(inst.num_scenarios)
    return inst.cost_matrix[:, idx].sum(axis=1)


def tree_cost(inst: MinMaxInstance, t: Iterable[int], s: int) -> float:
    """Cost of an edge set under scenario s."""
    row = inst.get_scenario_row(s)
    return float(sum(row[e] for e in sorted(t)))


def evaluate_minmax(inst: MinMaxInstance, t: EdgeSet) -> float:
    """max over scenarios of the tree cost."""
    _require_tree(inst, t)
    return float(scenario_costs(inst, t).max())


def scenario_opt(inst: MinMaxInstance, s: int, use_cache: bool = True) -> float:
    """C*(S): minimum spanning tree cost under scenario s."""
    if not 0 <= s < inst.num_scenarios:
        raise IndexError(f"scenario {s} out of range 0..{inst.num_scenarios - 1}")
    if use_cache:
        return float(inst.scenario_optima[s])
    row = inst.get_scenario_row(s)
    tree = kruskal_mst(inst.graph, row)
    return float(sum(row[e] for e in sorted(tree)))


def evaluate_regret(inst: MinMaxInstance, t: EdgeSet, use_cache: bool = True) -> float:
    """max over scenarios of (tree cost - C*(S))."""
    _require_tree(inst, t)
    costs = scenario_costs(inst, t)
    if use_cache:
        optima = inst.scenario_optima
    else:
        optima = np.array([scenario_opt(inst, s, use_cache=False) for s in range(inst.num_scenarios)])
    return float((costs - optima).max())


def validate_two_stage_solution(inst: TwoStageInstance, sol: TwoStageSolution) -> None:
    """
    Check the 2-stage solution invariants.

    Raises:
        InvalidTwoStageSolution: naming the first violated scenario
    """
    graph = inst.graph
    m = graph.num_edges
    if any(e < 0 or e >= m for e in sol.e1):
        raise InvalidTwoStageSolution(None, "first-stage edge index out of range")
    count, _ = connected_components(graph, sol.e1)
    if count != graph.num_vertices - len(sol.e1):
        raise InvalidTwoStageSolution(None, "first-stage edges contain a cycle")
    for s in sol.completions:
        if not 0 <= s < inst.num_scenarios:
            raise InvalidTwoStageSolution(s, "completion for an unknown scenario")
    for s in range(inst.num_scenarios):
        completion = sol.completions.get(s, frozenset())
        if sol.e1 & completion:
            raise InvalidTwoStageSolution(s, "completion overlaps the first stage")
        if not is_spanning_tree(graph, sol.tree_for(s)):
            raise InvalidTwoStageSolution(s, "first stage plus completion is not a spanning tree")


def two_stage_scenario_costs(inst: TwoStageInstance, sol: TwoStageSolution) -> np.ndarray:
    """Per-scenario combined cost c(E1) + c^S(E2^S)."""
    first = float(sum(inst.first_stage_costs[e] for e in sorted(sol.e1)))
    out = np.empty(inst.num_scenarios)
    for s in range(inst.num_scenarios):
        row = inst.get_scenario_row(s)
        out[s] = first + float(sum(row[e] for e in sorted(sol.completions.get(s, frozenset()))))
    return out


def evaluate_2stage(inst: TwoStageInstance, sol: TwoStageSolution) -> float:
    """max over scenarios of first-stage cost plus that scenario's completion cost."""
    validate_two_stage_solution(inst, sol)
    return float(two_stage_scenario_costs(inst, sol).max())
