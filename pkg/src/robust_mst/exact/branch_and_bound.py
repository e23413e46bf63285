"""
Best-first branch and bound for the min-max spanning tree.

A node fixes some edges in and some out. Its bound is the worst scenario's
cheapest tree respecting those decisions, which is valid for negative costs
too. Every per-scenario tree found while bounding is also a feasible tree
and is offered as an incumbent.
"""

import heapq
import itertools
import time
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

import numpy as np

from ..errors import TimeLimitExceeded
from ..graphs.spanning import connected_components, kruskal_mst
from ..graphs.union_find import UnionFind
from ..instances.evaluate import scenario_costs
from ..models.base import EdgeSet
from ..models.instance import MinMaxInstance
from ..models.solution import ExactResult
from ..utils.config import settings
from ..utils.logging import logger
from .baseline import baseline_mean_scenario


@dataclass(order=True)
class _Node:
    bound: float
    neg_depth: int
    tick: int
    included: FrozenSet[int] = field(compare=False)
    excluded: FrozenSet[int] = field(compare=False)
    trees: Tuple[EdgeSet, ...] = field(compare=False, default=())


class BranchAndBound:
    """Search state for one instance."""

    def __init__(self, inst: MinMaxInstance, time_limit: float):
        self.inst = inst
        self.graph = inst.graph
        self.costs = inst.cost_matrix
        self.time_limit = time_limit
        # Per-scenario Kruskal order, ties by index
        self.orders = [np.argsort(row, kind="stable").tolist() for row in self.costs]
        self.spread = self.costs.max(axis=0) - self.costs.min(axis=0)
        self.ticker = itertools.count()
        self.nodes = 0

        if inst.has_negative_costs:
            tree = kruskal_mst(self.graph, self.costs.max(axis=0))
            value = float(scenario_costs(inst, tree).max())
        else:
            tree, value = baseline_mean_scenario(inst)
        self.best_tree: EdgeSet = tree
        self.best_value: float = value

    def scenario_tree(self, s: int, included: FrozenSet[int], excluded: FrozenSet[int]) -> Optional[EdgeSet]:
        """Cheapest tree under scenario s containing `included` and avoiding `excluded`."""
        uf = UnionFind(self.graph.num_vertices)
        chosen = []
        for e in sorted(included):
            u, v = self.graph.edges[e]
            uf.union(u, v)
            chosen.append(e)
        for e in self.orders[s]:
            if uf.count == 1:
                break
            if e in excluded or e in included:
                continue
            u, v = self.graph.edges[e]
            if uf.union(u, v):
                chosen.append(e)
        return frozenset(chosen) if uf.count == 1 else None

    def evaluate_node(self, included: FrozenSet[int], excluded: FrozenSet[int], depth: int) -> Optional[_Node]:
        """Bound a node and update the incumbent; None if the node is infeasible."""
        self.nodes += 1
        trees = []
        bound = -np.inf
        for s in range(self.inst.num_scenarios):
            tree = self.scenario_tree(s, included, excluded)
            if tree is None:
                return None
            trees.append(tree)
            bound = max(bound, float(self.costs[s, sorted(tree)].sum()))

        for tree in dict.fromkeys(trees):
            value = float(scenario_costs(self.inst, tree).max())
            if value < self.best_value:
                self.best_value, self.best_tree = value, tree
        return _Node(bound, -depth, next(self.ticker), included, excluded, tuple(trees))

    def branch_edge(self, node: _Node) -> Optional[int]:
        """Undecided edge with the largest cost spread, lowest index first."""
        best, best_spread = None, -1.0
        for e in range(self.graph.num_edges):
            if e in node.included or e in node.excluded:
                continue
            if self.spread[e] > best_spread:
                best, best_spread = e, self.spread[e]
        return best

    def children(self, node: _Node, e: int) -> List[Tuple[FrozenSet[int], FrozenSet[int]]]:
        out = []
        u, v = self.graph.edges[e]
        count, labels = connected_components(self.graph, node.included)
        if labels[u] != labels[v]:
            out.append((node.included | {e}, node.excluded))
        remaining = [f for f in range(self.graph.num_edges) if f not in node.excluded and f != e]
        if connected_components(self.graph, remaining)[0] == 1:
            out.append((node.included, node.excluded | {e}))
        return out

    def incumbent(self, optimal: bool) -> ExactResult:
        return ExactResult(
            value=self.best_value, witness=self.best_tree,
            nodes_explored=self.nodes, optimal=optimal,
        )

    def run(self) -> ExactResult:
        start = time.monotonic()
        root = self.evaluate_node(frozenset(), frozenset(), 0)
        heap = [root] if root is not None else []

        while heap:
            if time.monotonic() - start > self.time_limit:
                logger.warning(
                    f"Branch and bound on '{self.inst.name}' hit the {self.time_limit:.1f}s limit; "
                    f"incumbent {self.best_value:.9g}"
                )
                raise TimeLimitExceeded(self.incumbent(optimal=False), self.time_limit)

            node = heapq.heappop(heap)
            if node.bound >= self.best_value:
                # Best-first: every remaining node is at least as bad
                break
            e = self.branch_edge(node)
            if e is None:
                continue
            for included, excluded in self.children(node, e):
                child = self.evaluate_node(included, excluded, -node.neg_depth + 1)
                if child is not None and child.bound < self.best_value:
                    heapq.heappush(heap, child)

        logger.debug(
            f"Branch and bound on '{self.inst.name}': {self.nodes} nodes, optimum {self.best_value:.9g}"
        )
        return self.incumbent(optimal=True)


def branch_and_bound_minmax(inst: MinMaxInstance, time_limit: Optional[float] = None) -> ExactResult:
    """
    OPT_1 by best-first branch and bound on edge inclusion and exclusion.

    Raises:
        TimeLimitExceeded: carrying the incumbent ExactResult (optimal=False)
    """
    time_limit = settings.bnb_time_limit_s if time_limit is None else time_limit
    return BranchAndBound(inst, time_limit).run()
