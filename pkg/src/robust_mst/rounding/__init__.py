"""
Randomized rounding for the min-max and 2-stage relaxations.
"""

from .constants import (
    compute_r_minmax,
    compute_r_2stage,
    compute_delta_minmax,
    compute_delta_2stage,
    check_admissible,
    lemma1_bound_multiplier,
    lemma3_bound_multiplier,
    failure_probability,
    guarantee_bound,
)
from .sampling import make_rng, sample_edges, scenario_stream
from .minmax import IterationRecord, iterate_minmax_rounding, round_minmax, shrink_fraction
from .two_stage import round_2stage, finalize_two_stage
from .pipeline import solve_minmax_approx, solve_2stage_approx

__all__ = [
    "compute_r_minmax",
    "compute_r_2stage",
    "compute_delta_minmax",
    "compute_delta_2stage",
    "check_admissible",
    "lemma1_bound_multiplier",
    "lemma3_bound_multiplier",
    "failure_probability",
    "guarantee_bound",
    "make_rng",
    "sample_edges",
    "scenario_stream",
    "IterationRecord",
    "iterate_minmax_rounding",
    "round_minmax",
    "shrink_fraction",
    "round_2stage",
    "finalize_two_stage",
    "solve_minmax_approx",
    "solve_2stage_approx",
]
