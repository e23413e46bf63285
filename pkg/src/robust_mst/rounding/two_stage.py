"""
Randomized rounding of an LP_2stage point into a first stage plus per-scenario completions.
"""

from typing import Dict, List, Optional

import numpy as np

from ..errors import IncompatibleSolution
from ..graphs.spanning import kruskal_forest, kruskal_mst
from ..graphs.union_find import UnionFind
from ..instances.evaluate import evaluate_2stage
from ..models.base import EdgeSet
from ..models.instance import TwoStageInstance
from ..models.solution import (
    FractionalSolution,
    RoundingStatus,
    TwoStageRoundingOutcome,
    TwoStageSolution,
)
from ..utils.logging import emit_trace, logger
from .constants import compute_r_2stage
from .sampling import FIRST_STAGE_STREAM, make_rng, sample_edges, scenario_stream


def finalize_two_stage(
    inst: TwoStageInstance,
    first_sampled: EdgeSet,
    second_sampled: List[EdgeSet],
) -> TwoStageSolution:
    """
    Turn connected sample families into a 2-stage solution.

    E1 is the minimum spanning forest of the first-stage sample under c_e.
    Each E2^S completes E1 by Kruskal over the scenario's second-stage
    sample under c^S_e, with E1 forced.
    """
    graph = inst.graph
    e1, _ = kruskal_forest(graph, inst.first_stage_costs, allowed=first_sampled)
    completions: Dict[int, EdgeSet] = {}
    for s, sampled in enumerate(second_sampled):
        tree = kruskal_mst(graph, inst.cost_matrix[s], allowed=sampled | e1, forced=e1)
        completions[s] = tree - e1
    return TwoStageSolution(e1=e1, completions=completions)


def round_2stage(
    inst: TwoStageInstance,
    sol: FractionalSolution,
    seed: int,
    r: Optional[int] = None,
) -> TwoStageRoundingOutcome:
    """
    Round an LP_2stage point.

    Each iteration k samples first-stage edges with probability x_e (added
    to every scenario's forest) and, per scenario, second-stage edges with
    probability x^S_e. The loop stops once every scenario's forest spans
    the graph, or after r iterations.

    Raises:
        NegativeCosts: if some cost is negative
        IncompatibleSolution: if the point has no second-stage rows
    """
    inst.require_nonnegative()
    graph = inst.graph
    m, k = graph.num_edges, inst.num_scenarios
    if not sol.has_second_stage:
        raise IncompatibleSolution("2-stage rounding needs second-stage rows")
    x, xs = sol.x_array, sol.second_stage_array
    if x.shape[0] != m or xs.shape != (k, m):
        raise IncompatibleSolution(f"point shape {x.shape}/{xs.shape} does not match m={m}, K={k}")
    r = compute_r_2stage(graph.num_vertices, k) if r is None else r

    forests = [UnionFind(graph.num_vertices) for _ in range(k)]
    first: set = set()
    second: List[set] = [set() for _ in range(k)]
    used = 0

    for it in range(1, r + 1):
        used = it
        before = [uf.count for uf in forests]
        first_mask = sample_edges(x, make_rng(seed, it, FIRST_STAGE_STREAM))
        first_idx = np.flatnonzero(first_mask)
        first.update(int(e) for e in first_idx)
        first_cost = float(inst.first_stage_costs[first_idx].sum())

        added = []
        for s in range(k):
            second_idx = np.flatnonzero(sample_edges(xs[s], make_rng(seed, it, scenario_stream(s))))
            second[s].update(int(e) for e in second_idx)
            for e in np.concatenate([first_idx, second_idx]):
                u, v = graph.edges[int(e)]
                forests[s].union(u, v)
            added.append(first_cost + float(inst.cost_matrix[s, second_idx].sum()))

        connected = all(uf.count == 1 for uf in forests)
        emit_trace(
            "round_2stage", seed=seed, iteration=it,
            components_before=max(before), components_after=max(uf.count for uf in forests),
            per_scenario_added_cost=added, connected=connected,
        )
        if connected:
            solution = finalize_two_stage(inst, frozenset(first), [frozenset(s2) for s2 in second])
            value = evaluate_2stage(inst, solution)
            logger.debug(f"2-stage rounding seed {seed} connected after {it} of {r} iterations, value {value:.6g}")
            return TwoStageRoundingOutcome(
                status=RoundingStatus.SUCCESS, solution=solution, value=value,
                iterations_used=it, seed=seed,
            )

    logger.debug(f"2-stage rounding seed {seed} not connected after {r} iterations")
    return TwoStageRoundingOutcome(status=RoundingStatus.NOT_CONNECTED, iterations_used=used, seed=seed)
