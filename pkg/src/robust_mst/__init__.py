"""
Robust Minimum Spanning Trees

LP rounding, exact oracles and hardness-reduction generators for min-max,
min-max regret and 2-stage robust spanning tree problems.
"""

__version__ = "0.1.0"
__author__ = "Robust MST Team"
__description__ = "Robust minimum spanning tree solvers and reduction generators"
