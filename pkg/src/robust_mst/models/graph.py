"""
Graph model: vertex count plus an indexed edge list.
"""

from numbers import Integral
from typing import List, Tuple

from pydantic import Field, field_validator, model_validator

from .base import BaseRobustModel, EdgeSet


def _is_id_pair(pair) -> bool:
    return (
        isinstance(pair, (list, tuple))
        and len(pair) == 2
        and all(isinstance(x, Integral) and not isinstance(x, bool) for x in pair)
    )


class Graph(BaseRobustModel):
    """Undirected multigraph; edge identity is the position in `edges`."""

    num_vertices: int = Field(..., ge=1, description="Number of vertices n")
    edges: Tuple[Tuple[int, int], ...] = Field(default=(), description="Edge endpoints, 0-based")

    @field_validator("edges", mode="before")
    @classmethod
    def _coerce_edges(cls, value):
        # Malformed entries pass through so the field check reports their index
        if not isinstance(value, (list, tuple)):
            return value
        return tuple(
            tuple(int(x) for x in pair) if _is_id_pair(pair) else pair
            for pair in value
        )

    @model_validator(mode="after")
    def _check_endpoints(self) -> "Graph":
        n = self.num_vertices
        for index, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {index} ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise ValueError(f"edge {index} is a self-loop at vertex {u}")
        return self

    @property
    def num_edges(self) -> int:
        """Number of edges m."""
        return len(self.edges)

    def cut_edges(self, side: EdgeSet) -> List[int]:
        """Get indices of edges with exactly one endpoint in `side` (the cut delta(W))."""
        return [i for i, (u, v) in enumerate(self.edges) if (u in side) != (v in side)]

