"""
End-to-end approximation: LP bound by binary search, then rounding with restarts.
"""

from typing import Optional

from ..errors import RestartsExhausted
from ..instances.evaluate import evaluate_2stage, evaluate_minmax
from ..lp.minmax import find_min_feasible_C
from ..lp.two_stage import find_min_feasible_C_2stage
from ..models.instance import MinMaxInstance, TwoStageInstance
from ..models.solution import (
    RoundingOutcome,
    RoundingParams,
    RoundingStatus,
    TwoStageRoundingOutcome,
    TwoStageSolution,
)
from ..utils.logging import logger
from .minmax import round_minmax
from .two_stage import round_2stage

SEED_MODULUS = 2**64


def _next_seed(seed: int) -> int:
    return (seed + 1) % SEED_MODULUS


def solve_minmax_approx(inst: MinMaxInstance, params: Optional[RoundingParams] = None) -> RoundingOutcome:
    """
    Min-max approximation: C_hat and x_hat from the LP, then rounding.

    A NotConnected run restarts with seed + 1, at most params.max_restarts times.

    Raises:
        NegativeCosts: if some cost is negative
        NumericalFailure: from the LP engine
        RestartsExhausted: if no attempt connects
    """
    params = params or RoundingParams()
    inst.require_nonnegative()

    if inst.graph.num_vertices == 1:
        tree = frozenset()
        return RoundingOutcome(
            status=RoundingStatus.SUCCESS, tree=tree, value=evaluate_minmax(inst, tree),
            seed=params.seed, lp_bound=0.0,
        )

    c_hat, x_hat = find_min_feasible_C(inst, params.tol_rel)
    logger.info(f"Instance '{inst.name}': LP bound C_hat = {c_hat:.9g}")

    seed = params.seed
    outcome = None
    for attempt in range(params.max_restarts + 1):
        outcome = round_minmax(inst, x_hat, seed)
        if outcome.is_success:
            return outcome.model_copy(update={"lp_bound": c_hat, "restarts": attempt})
        logger.warning(f"Rounding with seed {seed} did not connect; restarting")
        seed = _next_seed(seed)

    raise RestartsExhausted(params.max_restarts + 1, outcome.model_copy(update={"lp_bound": c_hat}))


def solve_2stage_approx(
    inst: TwoStageInstance,
    params: Optional[RoundingParams] = None,
) -> TwoStageRoundingOutcome:
    """
    2-stage approximation: LP_2stage bound, then 2-stage rounding with restarts.

    Raises:
        NegativeCosts: if some cost is negative
        NumericalFailure: from the LP engine
        RestartsExhausted: if no attempt connects every scenario
    """
    params = params or RoundingParams()
    inst.require_nonnegative()

    if inst.graph.num_vertices == 1:
        solution = TwoStageSolution(completions={s: frozenset() for s in range(inst.num_scenarios)})
        return TwoStageRoundingOutcome(
            status=RoundingStatus.SUCCESS, solution=solution, value=evaluate_2stage(inst, solution),
            seed=params.seed, lp_bound=0.0,
        )

    c_hat, sol = find_min_feasible_C_2stage(inst, params.tol_rel)
    logger.info(f"Instance '{inst.name}': 2-stage LP bound C_hat = {c_hat:.9g}")

    seed = params.seed
    outcome = None
    for attempt in range(params.max_restarts + 1):
        outcome = round_2stage(inst, sol, seed)
        if outcome.is_success:
            return outcome.model_copy(update={"lp_bound": c_hat, "restarts": attempt})
        logger.warning(f"2-stage rounding with seed {seed} did not connect; restarting")
        seed = _next_seed(seed)

    raise RestartsExhausted(params.max_restarts + 1, outcome.model_copy(update={"lp_bound": c_hat}))
