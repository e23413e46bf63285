"""
Undirected graph primitives.
"""

from .union_find import UnionFind
from .spanning import (
    connected_components,
    contract,
    is_spanning_tree,
    kruskal_mst,
    kruskal_forest,
    count_spanning_trees,
    enumerate_spanning_trees,
)
from .cuts import global_min_cut, cut_value, CUT_TOLERANCE
from .series_parallel import is_series_parallel

__all__ = [
    "UnionFind",
    "connected_components",
    "contract",
    "is_spanning_tree",
    "kruskal_mst",
    "kruskal_forest",
    "count_spanning_trees",
    "enumerate_spanning_trees",
    "global_min_cut",
    "cut_value",
    "CUT_TOLERANCE",
    "is_series_parallel",
]
