"""
Report and generator metadata models.
"""

from typing import Any, Dict, List, Optional

from pydantic import Field

from .base import BaseRobustModel


class SolutionReport(BaseRobustModel):
    """Solver report written by `solve` and `eval`."""

    algorithm: str
    seed: int = Field(default=0, ge=0, lt=2**64)
    value: Optional[float] = None
    tree_edges: Optional[List[int]] = None
    first_stage_edges: Optional[List[int]] = None
    completions: Optional[Dict[str, List[int]]] = None
    lp_bound: Optional[float] = None
    iterations: int = 0
    wall_time_ms: float = 0.0


class InstanceMetadata(BaseRobustModel):
    """Generator sidecar mapping structural roles to edge and vertex indices."""

    kind: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    edge_roles: Dict[str, Any] = Field(default_factory=dict)
    vertex_roles: Dict[str, Any] = Field(default_factory=dict)
    scenario_roles: List[Any] = Field(default_factory=list)
