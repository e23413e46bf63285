"""
Instance evaluators and the canonical file format.
"""

from .evaluate import (
    evaluate_minmax,
    evaluate_regret,
    evaluate_2stage,
    scenario_opt,
    scenario_costs,
    tree_cost,
    two_stage_scenario_costs,
    validate_two_stage_solution,
)
from .io import (
    load_instance,
    save_instance,
    load_report,
    save_report,
    save_metadata,
    canonical_json,
    format_float,
)

__all__ = [
    "evaluate_minmax",
    "evaluate_regret",
    "evaluate_2stage",
    "scenario_opt",
    "scenario_costs",
    "tree_cost",
    "two_stage_scenario_costs",
    "validate_two_stage_solution",
    "load_instance",
    "save_instance",
    "load_report",
    "save_report",
    "save_metadata",
    "canonical_json",
    "format_float",
]
