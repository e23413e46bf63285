"""
LP_minmax(C): cut-set relaxation with scenario budgets, solved by cutting planes.
"""

from typing import Optional, Tuple

import numpy as np

from ..errors import NumericalFailure
from ..graphs.cuts import global_min_cut
from ..models.instance import MinMaxInstance
from ..models.solution import FeasibilityOutcome, FeasibilityStatus, FractionalSolution
from ..utils.config import get_tolerance, settings
from ..utils.logging import emit_trace, logger
from .program import LinearProgram, LPStatus, Relation, lp_solve
from .separation import CutPool, separate


def cut_cap(n: int, k: int) -> int:
    """Largest cut pool a solve may build."""
    return settings.cut_cap_factor * n * k


def rejected_edges(inst: MinMaxInstance, C: float) -> np.ndarray:
    """Mask of edges priced above C under some scenario."""
    return (inst.cost_matrix > C).any(axis=0)


def build_lp_minmax(inst: MinMaxInstance, C: float, pool: CutPool) -> LinearProgram:
    """Assemble LP_minmax(C) with every pooled cut."""
    m, n = inst.graph.num_edges, inst.graph.num_vertices
    costs = inst.cost_matrix
    lp = LinearProgram.create(m, objective=costs.sum(axis=0))
    lp.upper[rejected_edges(inst, C)] = 0.0

    lp.add_row({e: 1.0 for e in range(m)}, Relation.EQ, n - 1)
    for s in range(inst.num_scenarios):
        lp.add_row({e: float(costs[s, e]) for e in range(m) if costs[s, e] != 0.0}, Relation.LE, C)
    for cut in pool.for_scenario(None):
        lp.add_row({e: 1.0 for e in cut.edges}, Relation.GE, 1.0)
    return lp


def solve_lp_minmax(
    inst: MinMaxInstance,
    C: float,
    pool: Optional[CutPool] = None,
) -> FeasibilityOutcome:
    """
    Decide feasibility of LP_minmax(C) by cutting planes.

    Args:
        inst: Instance with nonnegative costs
        C: Scenario budget
        pool: Cut pool to reuse and extend (a fresh one if omitted)

    Raises:
        NegativeCosts: if some cost is negative
        NumericalFailure: on backend failure or cut-cap overflow
    """
    inst.require_nonnegative()
    graph = inst.graph
    if graph.num_vertices < 2:
        raise ValueError("LP_minmax needs at least two vertices")
    if pool is None:
        pool = CutPool(cap=cut_cap(graph.num_vertices, inst.num_scenarios))
    tol = get_tolerance("separation")

    rounds = 0
    added = 0
    while True:
        lp = build_lp_minmax(inst, C, pool)
        result = lp_solve(lp)
        rounds += 1
        if result.status == LPStatus.INFEASIBLE:
            emit_trace("lp_minmax", C=C, round=rounds, status="infeasible", pool_size=pool.size)
            return FeasibilityOutcome(status=FeasibilityStatus.INFEASIBLE, rounds=rounds, cuts_added=added)
        if result.status != LPStatus.OPTIMAL:
            raise NumericalFailure(f"LP_minmax({C}) returned {result.status.value}")

        x = np.clip(result.x, 0.0, 1.0)
        cut = separate(graph, x, tol)
        emit_trace(
            "lp_minmax", C=C, round=rounds, status="optimal",
            cut_value=None if cut is None else cut.value, pool_size=pool.size,
        )
        if cut is not None and pool.contains(cut) and cut.value >= 1.0 - 100 * tol:
            cut = None
        if cut is None:
            return FeasibilityOutcome(
                status=FeasibilityStatus.FEASIBLE,
                solution=FractionalSolution.from_arrays(x),
                rounds=rounds,
                cuts_added=added,
            )
        pool.add(cut)
        added += 1


def verify_fractional_minmax(inst: MinMaxInstance, C: float, sol: FractionalSolution) -> bool:
    """Full post-hoc check of a point against LP_minmax(C)."""
    tol = 10 * get_tolerance("feasibility")
    x = sol.x_array
    n = inst.graph.num_vertices
    if np.any(x < -1e-9) or np.any(x > 1 + 1e-9):
        return False
    if abs(x.sum() - (n - 1)) > tol:
        return False
    if np.any(inst.cost_matrix @ x > C + tol * max(1.0, abs(C))):
        return False
    if np.any(x[rejected_edges(inst, C)] > 1e-9):
        return False
    value, _ = global_min_cut(inst.graph, x)
    return value >= 1.0 - 1e-5


def find_min_feasible_C(
    inst: MinMaxInstance,
    tol_rel: Optional[float] = None,
) -> Tuple[float, FractionalSolution]:
    """
    Binary search for the least C making LP_minmax(C) feasible.

    The search runs on [0, (n-1) c_max] until hi - lo <= tol_rel * max(1, hi)
    and returns hi with its feasible point. The cut pool is shared by all probes.

    Raises:
        NegativeCosts: if some cost is negative
        NumericalFailure: if the upper end is infeasible or the backend fails
    """
    inst.require_nonnegative()
    tol_rel = tol_rel or get_tolerance("lp")
    n = inst.graph.num_vertices
    pool = CutPool(cap=cut_cap(n, inst.num_scenarios))

    lo, hi = 0.0, (n - 1) * inst.c_max
    outcome = solve_lp_minmax(inst, hi, pool)
    if not outcome.is_feasible:
        raise NumericalFailure(f"LP_minmax is infeasible at the upper end C = {hi}")
    best = outcome.solution

    at_zero = solve_lp_minmax(inst, lo, pool)
    if at_zero.is_feasible:
        logger.debug(f"LP_minmax feasible at C = 0 for '{inst.name}'")
        return 0.0, at_zero.solution

    probes = 2
    while hi - lo > tol_rel * max(1.0, hi):
        mid = (lo + hi) / 2.0
        outcome = solve_lp_minmax(inst, mid, pool)
        probes += 1
        if outcome.is_feasible:
            hi, best = mid, outcome.solution
        else:
            lo = mid

    logger.debug(
        f"LP_minmax bound for '{inst.name}': C_hat = {hi:.9g} "
        f"after {probes} probes, {pool.size} cuts"
    )
    return hi, best


def lp_minmax_value(inst: MinMaxInstance, tol_rel: Optional[float] = None) -> float:
    """C_hat only."""
    c_hat, _ = find_min_feasible_C(inst, tol_rel)
    return c_hat
