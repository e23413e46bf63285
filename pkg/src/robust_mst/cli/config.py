"""
Run configuration shared by the CLI commands.
"""

from enum import Enum
from typing import Optional

from pydantic import Field

from ..errors import IncompatibleAlgorithm, NegativeCosts
from ..models.base import BaseRobustModel
from ..models.instance import Instance
from ..utils.config import settings


class Algorithm(str, Enum):
    """Algorithm ids accepted by `solve` and `bench`."""
    EXACT = "exact"
    EXACT_REGRET = "exact-regret"
    BNB = "bnb"
    LP_ROUND = "lp-round"
    BASELINE = "baseline"
    EXACT_2STAGE = "exact-2stage"
    LP_ROUND_2STAGE = "lp-round-2stage"

    @property
    def is_two_stage(self) -> bool:
        return self in (Algorithm.EXACT_2STAGE, Algorithm.LP_ROUND_2STAGE)

    @property
    def accepts_negative_costs(self) -> bool:
        return self in (Algorithm.EXACT, Algorithm.EXACT_REGRET, Algorithm.BNB, Algorithm.EXACT_2STAGE)


class RunConfig(BaseRobustModel):
    """Per-run solver settings; CLI flags override the environment defaults."""

    algorithm: Algorithm
    seed: int = Field(default_factory=lambda: settings.default_seed, ge=0, lt=2**64)
    tol: Optional[float] = Field(default=None, gt=0)
    max_restarts: int = Field(default_factory=lambda: settings.max_restarts, ge=0)
    time_limit_s: float = Field(default_factory=lambda: settings.bnb_time_limit_s, gt=0)
    timing: bool = True

    def check_compatible(self, inst: Instance) -> None:
        """
        Raises:
            IncompatibleAlgorithm: if the algorithm cannot handle the instance kind
            NegativeCosts: if the algorithm needs nonnegative costs and the instance has negatives
        """
        if self.algorithm.is_two_stage != inst.is_two_stage:
            kind = "2-stage" if inst.is_two_stage else "min-max"
            raise IncompatibleAlgorithm(f"algorithm '{self.algorithm.value}' does not accept a {kind} instance")
        if inst.has_negative_costs and not self.algorithm.accepts_negative_costs:
            raise NegativeCosts(f"algorithm '{self.algorithm.value}' requires nonnegative costs")
