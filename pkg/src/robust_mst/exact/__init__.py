"""
Exact oracles and the scenario-average baseline.
"""

from .enumeration import brute_force_minmax, brute_force_regret
from .two_stage import brute_force_2stage, optimal_completions
from .branch_and_bound import BranchAndBound, branch_and_bound_minmax
from .baseline import baseline_mean_scenario
from .cover import exact_min_cover

__all__ = [
    "brute_force_minmax",
    "brute_force_regret",
    "brute_force_2stage",
    "optimal_completions",
    "BranchAndBound",
    "branch_and_bound_minmax",
    "baseline_mean_scenario",
    "exact_min_cover",
]
