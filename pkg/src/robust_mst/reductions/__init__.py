"""
Instance generators: hardness constructions with witness converters, and random instances.
"""

from .label_cover import (
    LabelCoverLayout,
    gen_label_cover,
    gen_label_cover_with_metadata,
    label_cover_scenario_count,
    labeling_to_tree,
)
from .three_sat import (
    gen_3sat,
    gen_3sat_with_metadata,
    assignment_to_tree,
    brute_force_satisfiable,
    contradictory_pairs,
)
from .set_cover import (
    gen_set_cover,
    gen_set_cover_with_metadata,
    cover_to_solution,
    solution_to_cover,
)
from .random_instances import gen_random, gen_random_set_cover, random_connected_graph
from .dimacs import read_dimacs, write_dimacs

__all__ = [
    "LabelCoverLayout",
    "gen_label_cover",
    "gen_label_cover_with_metadata",
    "label_cover_scenario_count",
    "labeling_to_tree",
    "gen_3sat",
    "gen_3sat_with_metadata",
    "assignment_to_tree",
    "brute_force_satisfiable",
    "contradictory_pairs",
    "gen_set_cover",
    "gen_set_cover_with_metadata",
    "cover_to_solution",
    "solution_to_cover",
    "gen_random",
    "gen_random_set_cover",
    "random_connected_graph",
    "read_dimacs",
    "write_dimacs",
]
