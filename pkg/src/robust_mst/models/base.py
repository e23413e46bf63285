"""
Base models for solver data structures.
"""

from typing import FrozenSet

from pydantic import BaseModel, ConfigDict


# Edge sets and cut sides are plain frozensets of indices.
EdgeSet = FrozenSet[int]
CutSide = FrozenSet[int]


class BaseRobustModel(BaseModel):
    """Base model for all instance, solution and report structures."""

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        arbitrary_types_allowed=True,
        populate_by_name=True,
    )


def edge_set(indices) -> EdgeSet:
    """Build an EdgeSet from any iterable of edge indices."""
    return frozenset(int(i) for i in indices)
