"""
Cut-constraint separation and the cut pool shared across feasibility probes.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import NumericalFailure
from ..graphs.cuts import CUT_TOLERANCE, global_min_cut
from ..models.base import CutSide
from ..models.graph import Graph


@dataclass(frozen=True)
class CutConstraint:
    """Row sum_{e in delta(side)} x_e >= 1, optionally tied to one scenario."""
    side: CutSide
    edges: Tuple[int, ...]
    value: float
    scenario: Optional[int] = None


def separate(graph: Graph, weights: Sequence[float], tol: float) -> Optional[CutConstraint]:
    """
    Find a violated cut constraint.

    Returns:
        The global minimum cut if its weight is below 1 - tol, else None.
        The threshold never comes closer to 1 than CUT_TOLERANCE.
    """
    if graph.num_vertices < 2:
        return None
    value, side = global_min_cut(graph, weights)
    if value < 1.0 - max(tol, CUT_TOLERANCE):
        return CutConstraint(side=side, edges=tuple(graph.cut_edges(side)), value=value)
    return None


@dataclass
class CutPool:
    """
    Deduplicated cuts keyed by scenario (None for single-stage programs).

    Cuts never involve the budget C, so one pool serves every probe of a
    binary search.
    """

    cap: int
    cuts: Dict[Optional[int], List[CutConstraint]] = field(default_factory=dict)
    _seen: set = field(default_factory=set)

    @property
    def size(self) -> int:
        return sum(len(v) for v in self.cuts.values())

    def contains(self, cut: CutConstraint, scenario: Optional[int] = None) -> bool:
        return (scenario, cut.side) in self._seen

    def add(self, cut: CutConstraint, scenario: Optional[int] = None) -> None:
        """
        Store a cut.

        Raises:
            NumericalFailure: if the cut is already pooled (the LP ignored it)
                or the pool would exceed its cap
        """
        key = (scenario, cut.side)
        if key in self._seen:
            raise NumericalFailure(f"separation returned pooled cut {sorted(cut.side)} again")
        if self.size >= self.cap:
            raise NumericalFailure(f"cut pool exceeded its cap of {self.cap}")
        self._seen.add(key)
        self.cuts.setdefault(scenario, []).append(
            CutConstraint(side=cut.side, edges=cut.edges, value=cut.value, scenario=scenario)
        )

    def for_scenario(self, scenario: Optional[int] = None) -> List[CutConstraint]:
        return self.cuts.get(scenario, [])
