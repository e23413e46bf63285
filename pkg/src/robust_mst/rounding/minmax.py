"""
Randomized rounding of an LP_minmax point into a spanning tree.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..errors import IncompatibleSolution
from ..graphs.spanning import kruskal_mst
from ..graphs.union_find import UnionFind
from ..instances.evaluate import evaluate_minmax
from ..models.instance import MinMaxInstance
from ..models.solution import FractionalSolution, RoundingOutcome, RoundingStatus
from ..utils.logging import emit_trace, logger
from .constants import compute_r_minmax
from .sampling import make_rng, sample_edges


@dataclass(frozen=True)
class IterationRecord:
    """One rounding iteration as written to the trace sink."""

    iteration: int
    components_before: int
    components_after: int
    per_scenario_added_cost: Tuple[float, ...]
    connected: bool
    sampled: Tuple[int, ...] = ()

    def to_trace(self) -> dict:
        return {
            "iteration": self.iteration,
            "components_before": self.components_before,
            "components_after": self.components_after,
            "per_scenario_added_cost": list(self.per_scenario_added_cost),
            "connected": self.connected,
        }

    @property
    def shrank(self) -> bool:
        """Component count fell below 0.9 of its previous value, or was already 1."""
        return self.components_before == 1 or self.components_after < 0.9 * self.components_before


def _check_point(inst: MinMaxInstance, x_hat: FractionalSolution) -> np.ndarray:
    x = x_hat.x_array
    if x.shape[0] != inst.graph.num_edges:
        raise IncompatibleSolution(f"x has {x.shape[0]} entries, graph has {inst.graph.num_edges} edges")
    return x


def iterate_minmax_rounding(
    inst: MinMaxInstance,
    x_hat: FractionalSolution,
    seed: int,
    r: Optional[int] = None,
    stop_when_connected: bool = True,
) -> Iterator[Tuple[IterationRecord, frozenset]]:
    """
    Run the sampling loop, yielding each iteration's record and the accumulated edge set.

    Iteration k samples every edge with probability x_e from make_rng(seed, k).
    """
    x = _check_point(inst, x_hat)
    graph = inst.graph
    r = compute_r_minmax(graph.num_vertices) if r is None else r
    costs = inst.cost_matrix

    uf = UnionFind(graph.num_vertices)
    accumulated: set = set()
    for k in range(1, r + 1):
        before = uf.count
        mask = sample_edges(x, make_rng(seed, k))
        sampled = np.flatnonzero(mask)
        for e in sampled:
            u, v = graph.edges[int(e)]
            uf.union(u, v)
        accumulated.update(int(e) for e in sampled)

        added = costs[:, sampled].sum(axis=1) if sampled.size else np.zeros(inst.num_scenarios)
        record = IterationRecord(
            iteration=k,
            components_before=before,
            components_after=uf.count,
            per_scenario_added_cost=tuple(float(c) for c in added),
            connected=uf.count == 1,
            sampled=tuple(int(e) for e in sampled),
        )
        yield record, frozenset(accumulated)
        if stop_when_connected and record.connected:
            return


def round_minmax(
    inst: MinMaxInstance,
    x_hat: FractionalSolution,
    seed: int,
    r: Optional[int] = None,
) -> RoundingOutcome:
    """
    Round x_hat by repeated independent sampling until the sample spans the graph.

    The tree returned is Kruskal's tree of the sampled edges under the
    per-edge worst-case cost max_S c^S_e.

    Raises:
        NegativeCosts: if some cost is negative
        IncompatibleSolution: if x_hat does not match the graph
    """
    inst.require_nonnegative()
    r = compute_r_minmax(inst.graph.num_vertices) if r is None else r

    used = 0
    accumulated: frozenset = frozenset()
    for record, accumulated in iterate_minmax_rounding(inst, x_hat, seed, r):
        used = record.iteration
        emit_trace("round_minmax", seed=seed, **record.to_trace())
        if record.connected:
            weights = inst.cost_matrix.max(axis=0)
            tree = kruskal_mst(inst.graph, weights, allowed=accumulated)
            value = evaluate_minmax(inst, tree)
            logger.debug(f"Rounding seed {seed} connected after {used} of {r} iterations, value {value:.6g}")
            return RoundingOutcome(
                status=RoundingStatus.SUCCESS, tree=tree, value=value,
                iterations_used=used, seed=seed,
            )

    logger.debug(f"Rounding seed {seed} not connected after {r} iterations")
    return RoundingOutcome(status=RoundingStatus.NOT_CONNECTED, iterations_used=used or r, seed=seed)


def shrink_fraction(records: List[IterationRecord]) -> float:
    """Fraction of iterations whose record shrank."""
    if not records:
        return 1.0
    return sum(1 for rec in records if rec.shrank) / len(records)
