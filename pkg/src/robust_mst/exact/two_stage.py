"""
Exact 2-stage oracle: depth-first search over first-stage forests.

For a fixed first stage E1 the best completion in scenario S is a minimum
spanning tree of the graph with E1 contracted, so searching over forests
E1 is exact. Subtrees are pruned with a per-scenario MST bound where each
undecided edge costs min(c_e, c^S_e).
"""

from typing import Dict, List, Optional, Tuple

import numpy as np

from ..errors import InstanceTooLarge
from ..graphs.spanning import kruskal_mst
from ..graphs.union_find import UnionFind
from ..models.base import EdgeSet
from ..models.instance import TwoStageInstance
from ..models.solution import ExactResult, TwoStageSolution
from ..utils.config import settings
from ..utils.logging import logger


def optimal_completions(inst: TwoStageInstance, e1: EdgeSet) -> Tuple[float, Dict[int, EdgeSet]]:
    """Best completions of a first-stage forest and the resulting worst-case cost."""
    first = float(sum(inst.first_stage_costs[e] for e in sorted(e1)))
    worst = -np.inf
    completions: Dict[int, EdgeSet] = {}
    for s in range(inst.num_scenarios):
        row = inst.cost_matrix[s]
        tree = kruskal_mst(inst.graph, row, forced=e1)
        completion = tree - e1
        completions[s] = completion
        worst = max(worst, first + float(sum(row[e] for e in sorted(completion))))
    return worst, completions


class _ForestSearch:
    """Include/exclude search over edges in index order."""

    def __init__(self, inst: TwoStageInstance):
        self.inst = inst
        self.graph = inst.graph
        self.m = inst.graph.num_edges
        self.first = inst.first_stage_costs
        self.second = inst.cost_matrix
        # Undecided edges may still go either way
        self.relaxed = np.minimum(self.second, self.first[np.newaxis, :])
        self.best_value, completions = optimal_completions(inst, frozenset())
        self.best = TwoStageSolution(e1=frozenset(), completions=completions)
        self.nodes = 1

    def lower_bound(self, chosen: List[int], next_edge: int, first_cost: float) -> float:
        forced = frozenset(chosen)
        bound = -np.inf
        for s in range(self.inst.num_scenarios):
            prices = self.second[s].copy()
            prices[next_edge:] = self.relaxed[s, next_edge:]
            tree = kruskal_mst(self.graph, prices, forced=forced)
            bound = max(bound, first_cost + float(sum(prices[e] for e in sorted(tree - forced))))
        return bound

    def visit(self, chosen: List[int], first_cost: float) -> None:
        e1 = frozenset(chosen)
        value, completions = optimal_completions(self.inst, e1)
        if value < self.best_value:
            self.best_value = value
            self.best = TwoStageSolution(e1=e1, completions=completions)

    def search(self, index: int, uf: UnionFind, chosen: List[int], first_cost: float) -> None:
        self.nodes += 1
        if index == self.m or uf.count == 1:
            return
        if self.lower_bound(chosen, index, first_cost) >= self.best_value:
            return

        u, v = self.graph.edges[index]
        if not uf.connected(u, v):
            child = uf.copy()
            child.union(u, v)
            chosen.append(index)
            cost = first_cost + float(self.first[index])
            self.visit(chosen, cost)
            self.search(index + 1, child, chosen, cost)
            chosen.pop()
        self.search(index + 1, uf, chosen, first_cost)


def brute_force_2stage(inst: TwoStageInstance, edge_limit: Optional[int] = None) -> ExactResult:
    """
    OPT_3 by exhaustive search over first-stage forests with bound pruning.

    Raises:
        InstanceTooLarge: if the graph has more edges than the configured limit
    """
    edge_limit = settings.two_stage_edge_limit if edge_limit is None else edge_limit
    if inst.graph.num_edges > edge_limit:
        raise InstanceTooLarge(
            f"2-stage search is limited to {edge_limit} edges, instance has {inst.graph.num_edges}"
        )

    search = _ForestSearch(inst)
    search.search(0, UnionFind(inst.graph.num_vertices), [], 0.0)
    logger.debug(
        f"2-stage search of '{inst.name}': {search.nodes} nodes, optimum {search.best_value:.9g}"
    )
    return ExactResult(value=float(search.best_value), witness=search.best, nodes_explored=search.nodes)
