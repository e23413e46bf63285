"""
Cutting-plane LP engine for the min-max and 2-stage relaxations.
"""

from .program import LinearProgram, LPResult, LPStatus, Relation, ConstraintRow, lp_solve
from .separation import CutConstraint, CutPool, separate
from .minmax import (
    solve_lp_minmax,
    find_min_feasible_C,
    verify_fractional_minmax,
    lp_minmax_value,
)
from .two_stage import (
    solve_lp_2stage,
    find_min_feasible_C_2stage,
    verify_fractional_2stage,
)

__all__ = [
    "LinearProgram",
    "LPResult",
    "LPStatus",
    "Relation",
    "ConstraintRow",
    "lp_solve",
    "CutConstraint",
    "CutPool",
    "separate",
    "solve_lp_minmax",
    "find_min_feasible_C",
    "verify_fractional_minmax",
    "lp_minmax_value",
    "solve_lp_2stage",
    "find_min_feasible_C_2stage",
    "verify_fractional_2stage",
]
