"""
K-approximation baseline: MST of the scenario-average costs.
"""

from typing import Tuple

from ..graphs.spanning import kruskal_mst
from ..instances.evaluate import evaluate_minmax
from ..models.base import EdgeSet
from ..models.instance import MinMaxInstance


def baseline_mean_scenario(inst: MinMaxInstance) -> Tuple[EdgeSet, float]:
    """
    Kruskal tree under the mean cost over scenarios, with its min-max value.

    Raises:
        NegativeCosts: if some cost is negative
    """
    inst.require_nonnegative()
    mean = inst.cost_matrix.mean(axis=0)
    tree = kruskal_mst(inst.graph, mean)
    return tree, evaluate_minmax(inst, tree)
