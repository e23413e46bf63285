"""
LP_2stage(C): first-stage variables x_e plus per-scenario x^S_e.

Variable layout: x_e at index e, x^S_e at index m + S*m + e.
"""

from typing import List, Optional, Tuple

import numpy as np

from ..errors import NumericalFailure
from ..graphs.cuts import global_min_cut
from ..models.instance import TwoStageInstance
from ..models.solution import FeasibilityOutcome, FeasibilityStatus, FractionalSolution
from ..utils.config import get_tolerance
from ..utils.logging import emit_trace, logger
from .minmax import cut_cap
from .program import LinearProgram, LPStatus, Relation, lp_solve
from .separation import CutConstraint, CutPool, separate


def _var(m: int, s: int, e: int) -> int:
    return m + s * m + e


def build_lp_2stage(inst: TwoStageInstance, C: float, pool: CutPool) -> LinearProgram:
    """Assemble LP_2stage(C) with every pooled per-scenario cut."""
    graph = inst.graph
    m, n, k = graph.num_edges, graph.num_vertices, inst.num_scenarios
    first = inst.first_stage_costs
    second = inst.cost_matrix

    objective = np.concatenate([k * first, second.reshape(-1)])
    lp = LinearProgram.create(m * (k + 1), objective=objective)
    lp.upper[:m][first > C] = 0.0
    for s in range(k):
        lp.upper[_var(m, s, 0):_var(m, s, m)][second[s] > C] = 0.0

    for s in range(k):
        both = {e: 1.0 for e in range(m)}
        both.update({_var(m, s, e): 1.0 for e in range(m)})
        lp.add_row(both, Relation.EQ, n - 1)

        budget = {e: float(first[e]) for e in range(m) if first[e] != 0.0}
        budget.update({_var(m, s, e): float(second[s, e]) for e in range(m) if second[s, e] != 0.0})
        lp.add_row(budget, Relation.LE, C)

        for cut in pool.for_scenario(s):
            row = {e: 1.0 for e in cut.edges}
            row.update({_var(m, s, e): 1.0 for e in cut.edges})
            lp.add_row(row, Relation.GE, 1.0)
    return lp


def _split(inst: TwoStageInstance, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    m = inst.graph.num_edges
    x = np.clip(z[:m], 0.0, 1.0)
    xs = np.clip(z[m:].reshape(inst.num_scenarios, m), 0.0, 1.0)
    return x, xs


def solve_lp_2stage(
    inst: TwoStageInstance,
    C: float,
    pool: Optional[CutPool] = None,
) -> FeasibilityOutcome:
    """
    Decide feasibility of LP_2stage(C) by cutting planes.

    Separation runs per scenario on y^S = x + x^S; violated cuts are added
    in scenario-index order, each tied to the scenario that produced it.

    Raises:
        NegativeCosts: if a first- or second-stage cost is negative
        NumericalFailure: on backend failure or cut-cap overflow
    """
    inst.require_nonnegative()
    graph = inst.graph
    if graph.num_vertices < 2:
        raise ValueError("LP_2stage needs at least two vertices")
    if pool is None:
        pool = CutPool(cap=cut_cap(graph.num_vertices, inst.num_scenarios))
    tol = get_tolerance("separation")

    rounds = 0
    added = 0
    while True:
        result = lp_solve(build_lp_2stage(inst, C, pool))
        rounds += 1
        if result.status == LPStatus.INFEASIBLE:
            emit_trace("lp_2stage", C=C, round=rounds, status="infeasible", pool_size=pool.size)
            return FeasibilityOutcome(status=FeasibilityStatus.INFEASIBLE, rounds=rounds, cuts_added=added)
        if result.status != LPStatus.OPTIMAL:
            raise NumericalFailure(f"LP_2stage({C}) returned {result.status.value}")

        x, xs = _split(inst, result.x)
        violated: List[Tuple[int, CutConstraint]] = []
        for s in range(inst.num_scenarios):
            cut = separate(graph, x + xs[s], tol)
            if cut is None:
                continue
            if pool.contains(cut, s) and cut.value >= 1.0 - 100 * tol:
                continue
            violated.append((s, cut))

        emit_trace(
            "lp_2stage", C=C, round=rounds, status="optimal",
            violated_scenarios=[s for s, _ in violated], pool_size=pool.size,
        )
        if not violated:
            return FeasibilityOutcome(
                status=FeasibilityStatus.FEASIBLE,
                solution=FractionalSolution.from_arrays(x, xs),
                rounds=rounds,
                cuts_added=added,
            )
        for s, cut in violated:
            pool.add(cut, s)
            added += 1


def verify_fractional_2stage(inst: TwoStageInstance, C: float, sol: FractionalSolution) -> bool:
    """Full post-hoc check of a point against LP_2stage(C)."""
    if not sol.has_second_stage:
        return False
    tol = 10 * get_tolerance("feasibility")
    n = inst.graph.num_vertices
    x, xs = sol.x_array, sol.second_stage_array
    if xs.shape != inst.cost_matrix.shape:
        return False
    if np.any(x > 1e-9 + 1) or np.any(xs > 1 + 1e-9) or np.any(x < -1e-9) or np.any(xs < -1e-9):
        return False
    if np.any(x[inst.first_stage_costs > C] > 1e-9):
        return False
    slack = tol * max(1.0, abs(C))
    first_cost = float(inst.first_stage_costs @ x)
    for s in range(inst.num_scenarios):
        y = x + xs[s]
        if abs(y.sum() - (n - 1)) > tol:
            return False
        if np.any(xs[s][inst.cost_matrix[s] > C] > 1e-9):
            return False
        if first_cost + float(inst.cost_matrix[s] @ xs[s]) > C + slack:
            return False
        value, _ = global_min_cut(inst.graph, y)
        if value < 1.0 - 1e-5:
            return False
    return True


def find_min_feasible_C_2stage(
    inst: TwoStageInstance,
    tol_rel: Optional[float] = None,
) -> Tuple[float, FractionalSolution]:
    """
    Binary search for the least C making LP_2stage(C) feasible.

    The window is [0, (n-1) c_max] with c_max taken over both stages.
    """
    inst.require_nonnegative()
    tol_rel = tol_rel or get_tolerance("lp")
    n = inst.graph.num_vertices
    pool = CutPool(cap=cut_cap(n, inst.num_scenarios))

    lo, hi = 0.0, (n - 1) * inst.c_max
    outcome = solve_lp_2stage(inst, hi, pool)
    if not outcome.is_feasible:
        raise NumericalFailure(f"LP_2stage is infeasible at the upper end C = {hi}")
    best = outcome.solution

    at_zero = solve_lp_2stage(inst, lo, pool)
    if at_zero.is_feasible:
        return 0.0, at_zero.solution

    while hi - lo > tol_rel * max(1.0, hi):
        mid = (lo + hi) / 2.0
        outcome = solve_lp_2stage(inst, mid, pool)
        if outcome.is_feasible:
            hi, best = mid, outcome.solution
        else:
            lo = mid

    logger.debug(f"LP_2stage bound for '{inst.name}': C_hat = {hi:.9g}, {pool.size} cuts")
    return hi, best
