"""
Linear program container and the LP backend call.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from ..errors import NumericalFailure
from ..utils.config import settings
from ..utils.logging import logger


class Relation(str, Enum):
    """Constraint sense."""
    LE = "<="
    EQ = "="
    GE = ">="


class LPStatus(str, Enum):
    """Backend outcome."""
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class ConstraintRow:
    """Sparse row: sum(coef * x[idx]) relation rhs."""
    coefficients: Dict[int, float]
    relation: Relation
    rhs: float


@dataclass
class LinearProgram:
    """Minimise objective . x subject to bounded variables and sparse rows."""

    num_vars: int
    objective: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    rows: List[ConstraintRow] = field(default_factory=list)

    @classmethod
    def create(cls, num_vars: int, objective: Optional[Sequence[float]] = None,
               lower: float = 0.0, upper: float = 1.0) -> "LinearProgram":
        """Build a program with uniform bounds and a zero objective by default."""
        obj = np.zeros(num_vars) if objective is None else np.asarray(objective, dtype=np.float64)
        return cls(
            num_vars=num_vars,
            objective=obj,
            lower=np.full(num_vars, float(lower)),
            upper=np.full(num_vars, float(upper)),
        )

    def add_row(self, coefficients: Dict[int, float], relation: Relation, rhs: float) -> None:
        """Append a constraint row."""
        if not all(np.isfinite(list(coefficients.values()))) or not np.isfinite(rhs):
            raise ValueError("constraint coefficients must be finite")
        self.rows.append(ConstraintRow(dict(coefficients), Relation(relation), float(rhs)))

    def to_arrays(self) -> Tuple[Optional[np.ndarray], Optional[np.ndarray], Optional[np.ndarray], Optional[np.ndarray]]:
        """Dense (A_ub, b_ub, A_eq, b_eq) with >= rows negated into <= form."""
        ub_rows, ub_rhs, eq_rows, eq_rhs = [], [], [], []
        for row in self.rows:
            dense = np.zeros(self.num_vars)
            for idx, coef in row.coefficients.items():
                dense[idx] += coef
            if row.relation == Relation.EQ:
                eq_rows.append(dense)
                eq_rhs.append(row.rhs)
            elif row.relation == Relation.LE:
                ub_rows.append(dense)
                ub_rhs.append(row.rhs)
            else:
                ub_rows.append(-dense)
                ub_rhs.append(-row.rhs)
        a_ub = np.vstack(ub_rows) if ub_rows else None
        b_ub = np.asarray(ub_rhs) if ub_rows else None
        a_eq = np.vstack(eq_rows) if eq_rows else None
        b_eq = np.asarray(eq_rhs) if eq_rows else None
        return a_ub, b_ub, a_eq, b_eq

    def max_violation(self, x: np.ndarray) -> float:
        """Largest bound or row violation of a point."""
        worst = float(max(0.0, np.max(self.lower - x, initial=0.0), np.max(x - self.upper, initial=0.0)))
        for row in self.rows:
            lhs = sum(coef * x[idx] for idx, coef in row.coefficients.items())
            if row.relation == Relation.LE:
                gap = lhs - row.rhs
            elif row.relation == Relation.GE:
                gap = row.rhs - lhs
            else:
                gap = abs(lhs - row.rhs)
            worst = max(worst, gap)
        return worst


@dataclass
class LPResult:
    """Backend result."""
    status: LPStatus
    x: Optional[np.ndarray] = None
    objective: Optional[float] = None


def lp_solve(lp: LinearProgram, max_iterations: int = 100_000) -> LPResult:
    """
    Solve a linear program with the HiGHS backend.

    Raises:
        NumericalFailure: on iteration cap, backend failure, or an
            optimal point violating the program beyond tolerance
    """
    a_ub, b_ub, a_eq, b_eq = lp.to_arrays()
    bounds = list(zip(lp.lower.tolist(), lp.upper.tolist()))
    tol = settings.feasibility_tol

    try:
        res = linprog(
            lp.objective,
            A_ub=a_ub,
            b_ub=b_ub,
            A_eq=a_eq,
            b_eq=b_eq,
            bounds=bounds,
            method=settings.lp_backend,
            options={"maxiter": max_iterations, "presolve": True},
        )
    except ValueError as e:
        raise NumericalFailure(f"LP backend rejected the program: {e}") from e

    if res.status == 2:
        return LPResult(status=LPStatus.INFEASIBLE)
    if res.status == 3:
        return LPResult(status=LPStatus.UNBOUNDED)
    if res.status != 0:
        logger.error(f"LP backend failed with status {res.status}: {res.message}")
        raise NumericalFailure(f"LP backend status {res.status}: {res.message}")

    x = np.asarray(res.x, dtype=np.float64)
    violation = lp.max_violation(x)
    if violation > 10 * tol:
        raise NumericalFailure(f"LP point violates the program by {violation:.3e}")
    return LPResult(status=LPStatus.OPTIMAL, x=x, objective=float(res.fun))
