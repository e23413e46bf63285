"""
Data models for instances, solutions and reports.
"""

from .base import BaseRobustModel, EdgeSet, CutSide, edge_set
from .graph import Graph
from .instance import MinMaxInstance, TwoStageInstance, Instance
from .solution import (
    TwoStageSolution,
    FractionalSolution,
    FeasibilityStatus,
    FeasibilityOutcome,
    RoundingStatus,
    RoundingParams,
    RoundingOutcome,
    TwoStageRoundingOutcome,
    ExactResult,
)
from .report import SolutionReport, InstanceMetadata
from .problems import (
    LabelCoverEdge,
    LabelCoverInstance,
    Labeling,
    CnfFormula,
    SetCoverInstance,
)

__all__ = [
    # Base models
    "BaseRobustModel",
    "EdgeSet",
    "CutSide",
    "edge_set",

    # Graph and instances
    "Graph",
    "MinMaxInstance",
    "TwoStageInstance",
    "Instance",

    # Solutions and outcomes
    "TwoStageSolution",
    "FractionalSolution",
    "FeasibilityStatus",
    "FeasibilityOutcome",
    "RoundingStatus",
    "RoundingParams",
    "RoundingOutcome",
    "TwoStageRoundingOutcome",
    "ExactResult",

    # Reports
    "SolutionReport",
    "InstanceMetadata",

    # Source problems
    "LabelCoverEdge",
    "LabelCoverInstance",
    "Labeling",
    "CnfFormula",
    "SetCoverInstance",
]
