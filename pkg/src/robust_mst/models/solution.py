"""
Solution models: integral 2-stage solutions, fractional LP points and solver outcomes.
"""

from enum import Enum
from functools import cached_property
from typing import Dict, Optional, Tuple, Union

import numpy as np
from pydantic import Field, field_validator

from .base import BaseRobustModel, EdgeSet


class TwoStageSolution(BaseRobustModel):
    """First-stage edges E1 plus one completion E2^S per scenario."""

    e1: EdgeSet = Field(default_factory=frozenset, description="First-stage edge set")
    completions: Dict[int, EdgeSet] = Field(default_factory=dict, description="Scenario index -> E2^S")

    def tree_for(self, s: int) -> EdgeSet:
        """Get T^S = E1 ∪ E2^S."""
        return self.e1 | self.completions.get(s, frozenset())


class FractionalSolution(BaseRobustModel):
    """LP point: x_e and, for 2-stage programs, per-scenario x^S_e."""

    x: Tuple[float, ...]
    second_stage: Optional[Tuple[Tuple[float, ...], ...]] = None

    @field_validator("x", mode="before")
    @classmethod
    def _coerce_x(cls, value):
        return tuple(float(v) for v in value)

    @field_validator("second_stage", mode="before")
    @classmethod
    def _coerce_second_stage(cls, value):
        if value is None:
            return None
        return tuple(tuple(float(v) for v in row) for row in value)

    @cached_property
    def x_array(self) -> np.ndarray:
        return np.asarray(self.x, dtype=np.float64)

    @cached_property
    def second_stage_array(self) -> Optional[np.ndarray]:
        if self.second_stage is None:
            return None
        return np.asarray(self.second_stage, dtype=np.float64).reshape(len(self.second_stage), -1)

    @property
    def has_second_stage(self) -> bool:
        return self.second_stage is not None

    @classmethod
    def from_arrays(cls, x: np.ndarray, second_stage: Optional[np.ndarray] = None) -> "FractionalSolution":
        """Clip to [0, 1] and build a solution from numpy arrays."""
        x = np.clip(np.asarray(x, dtype=np.float64), 0.0, 1.0)
        rows = None
        if second_stage is not None:
            rows = np.clip(np.asarray(second_stage, dtype=np.float64), 0.0, 1.0).tolist()
        return cls(x=x.tolist(), second_stage=rows)


class FeasibilityStatus(str, Enum):
    """Outcome tag of a feasibility LP."""
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


class FeasibilityOutcome(BaseRobustModel):
    """Feasible(solution) or Infeasible, plus cutting-plane bookkeeping."""

    status: FeasibilityStatus
    solution: Optional[FractionalSolution] = None
    rounds: int = 0
    cuts_added: int = 0

    @property
    def is_feasible(self) -> bool:
        return self.status == FeasibilityStatus.FEASIBLE


class RoundingStatus(str, Enum):
    """Outcome tag of a rounding run."""
    SUCCESS = "success"
    NOT_CONNECTED = "not_connected"


class RoundingParams(BaseRobustModel):
    """Parameters of the randomized rounding pipeline."""

    rho1: float = Field(default=2.0, ge=2.0)
    f: float = Field(default=1.0, ge=1.0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    max_restarts: int = Field(default=3, ge=0)
    tol_rel: Optional[float] = Field(default=None, gt=0)


class RoundingOutcome(BaseRobustModel):
    """Result of one min-max rounding run (or of the full pipeline)."""

    status: RoundingStatus
    tree: Optional[EdgeSet] = None
    value: Optional[float] = None
    iterations_used: int = 0
    seed: int = 0
    lp_bound: Optional[float] = None
    restarts: int = 0

    @property
    def is_success(self) -> bool:
        return self.status == RoundingStatus.SUCCESS


class TwoStageRoundingOutcome(BaseRobustModel):
    """Result of one 2-stage rounding run (or of the full pipeline)."""

    status: RoundingStatus
    solution: Optional[TwoStageSolution] = None
    value: Optional[float] = None
    iterations_used: int = 0
    seed: int = 0
    lp_bound: Optional[float] = None
    restarts: int = 0

    @property
    def is_success(self) -> bool:
        return self.status == RoundingStatus.SUCCESS


class ExactResult(BaseRobustModel):
    """Computed optimum with a witness tree or 2-stage solution."""

    value: float
    witness: Union[TwoStageSolution, EdgeSet]
    nodes_explored: int = 0
    optimal: bool = True

    @property
    def tree(self) -> Optional[EdgeSet]:
        return None if isinstance(self.witness, TwoStageSolution) else self.witness
