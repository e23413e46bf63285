"""
Set Cover oracle by subset enumeration.
"""

from itertools import combinations
from typing import Tuple

from ..errors import NotACover
from ..models.problems import SetCoverInstance


def exact_min_cover(sc: SetCoverInstance) -> Tuple[int, ...]:
    """Smallest cover, lexicographically first among equals."""
    for size in range(1, sc.num_subsets + 1):
        for chosen in combinations(range(sc.num_subsets), size):
            if sc.covers(chosen):
                return chosen
    raise NotACover("the full collection does not cover the ground set")
