"""
Robust spanning tree instance models.
"""

from functools import cached_property
from numbers import Real
from typing import Tuple

import numpy as np
from pydantic import Field, field_validator, model_validator

from ..errors import DisconnectedGraph, NegativeCosts, RowLengthMismatch
from .base import BaseRobustModel
from .graph import Graph


CostRow = Tuple[float, ...]


def _is_number(c) -> bool:
    return isinstance(c, Real) and not isinstance(c, bool)


def _coerce_row(row):
    # Anything not coercible is left for the field check, which reports its position
    if not isinstance(row, (list, tuple, np.ndarray)):
        return row
    return tuple(float(c) if _is_number(c) else c for c in row)


def _coerce_rows(value):
    if not isinstance(value, (list, tuple, np.ndarray)):
        return value
    return tuple(_coerce_row(row) for row in value)


def _check_connected(graph: Graph) -> None:
    # Import here to avoid circular imports
    from ..graphs.spanning import connected_components

    count, _ = connected_components(graph, frozenset(range(graph.num_edges)))
    if count != 1:
        raise DisconnectedGraph(f"graph has {count} connected components")


def _check_rows(rows, m: int, label: str) -> None:
    for k, row in enumerate(rows):
        if len(row) != m:
            raise RowLengthMismatch(f"{label}[{k}]", m, len(row))
        if not all(np.isfinite(row)):
            raise ValueError(f"{label}[{k}] contains a non-finite cost")


class MinMaxInstance(BaseRobustModel):
    """Graph plus K scenario cost rows (min-max and min-max regret)."""

    name: str = Field(default="", description="Instance name")
    graph: Graph
    scenarios: Tuple[CostRow, ...] = Field(..., description="K rows of per-edge costs")

    @field_validator("scenarios", mode="before")
    @classmethod
    def _coerce_scenarios(cls, value):
        return _coerce_rows(value)

    @model_validator(mode="after")
    def _check_instance(self) -> "MinMaxInstance":
        if len(self.scenarios) < 1:
            raise ValueError("at least one scenario is required")
        _check_rows(self.scenarios, self.graph.num_edges, "scenarios")
        _check_connected(self.graph)
        return self

    @property
    def num_scenarios(self) -> int:
        """Number of scenarios K."""
        return len(self.scenarios)

    @property
    def is_two_stage(self) -> bool:
        return False

    @cached_property
    def cost_matrix(self) -> np.ndarray:
        """Scenario costs as a (K, m) array."""
        return np.asarray(self.scenarios, dtype=np.float64).reshape(
            self.num_scenarios, self.graph.num_edges
        )

    @property
    def c_max(self) -> float:
        """Largest cost over all scenarios and edges."""
        return float(self.cost_matrix.max()) if self.cost_matrix.size else 0.0

    @property
    def has_negative_costs(self) -> bool:
        return bool(self.cost_matrix.size and self.cost_matrix.min() < 0)

    def require_nonnegative(self) -> None:
        """Raise NegativeCosts unless every cost is >= 0."""
        if self.has_negative_costs:
            raise NegativeCosts(f"instance '{self.name}' has negative scenario costs")

    def get_scenario_row(self, s: int) -> np.ndarray:
        """Get the cost vector of scenario s."""
        return self.cost_matrix[s]

    @cached_property
    def scenario_optima(self) -> np.ndarray:
        """C*(S) for every scenario, computed once per instance."""
        from ..graphs.spanning import kruskal_mst

        optima = np.empty(self.num_scenarios)
        for s in range(self.num_scenarios):
            row = self.cost_matrix[s]
            tree = kruskal_mst(self.graph, row)
            optima[s] = float(sum(row[e] for e in sorted(tree)))
        return optima


class TwoStageInstance(BaseRobustModel):
    """Graph plus first-stage costs and K second-stage scenario rows."""

    name: str = Field(default="", description="Instance name")
    graph: Graph
    first_stage: CostRow = Field(..., description="First-stage per-edge costs")
    scenarios: Tuple[CostRow, ...] = Field(..., description="K rows of second-stage costs")

    @field_validator("first_stage", mode="before")
    @classmethod
    def _coerce_first_stage(cls, value):
        return _coerce_row(value)

    @field_validator("scenarios", mode="before")
    @classmethod
    def _coerce_scenarios(cls, value):
        return _coerce_rows(value)

    @model_validator(mode="after")
    def _check_instance(self) -> "TwoStageInstance":
        if len(self.scenarios) < 1:
            raise ValueError("at least one scenario is required")
        m = self.graph.num_edges
        _check_rows([self.first_stage], m, "first_stage_costs")
        _check_rows(self.scenarios, m, "scenarios")
        _check_connected(self.graph)
        return self

    @property
    def num_scenarios(self) -> int:
        return len(self.scenarios)

    @property
    def is_two_stage(self) -> bool:
        return True

    @cached_property
    def first_stage_costs(self) -> np.ndarray:
        return np.asarray(self.first_stage, dtype=np.float64)

    @cached_property
    def cost_matrix(self) -> np.ndarray:
        """Second-stage costs as a (K, m) array."""
        return np.asarray(self.scenarios, dtype=np.float64).reshape(
            self.num_scenarios, self.graph.num_edges
        )

    @property
    def c_max(self) -> float:
        """Largest first- or second-stage cost."""
        values = [0.0]
        if self.first_stage_costs.size:
            values.append(float(self.first_stage_costs.max()))
        if self.cost_matrix.size:
            values.append(float(self.cost_matrix.max()))
        return max(values)

    @property
    def has_negative_costs(self) -> bool:
        first = bool(self.first_stage_costs.size and self.first_stage_costs.min() < 0)
        second = bool(self.cost_matrix.size and self.cost_matrix.min() < 0)
        return first or second

    def require_nonnegative(self) -> None:
        if self.has_negative_costs:
            raise NegativeCosts(f"instance '{self.name}' has negative costs")

    def get_scenario_row(self, s: int) -> np.ndarray:
        return self.cost_matrix[s]


Instance = MinMaxInstance | TwoStageInstance

