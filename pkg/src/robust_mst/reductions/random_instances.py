"""
Seeded random instance generators.
"""

from typing import List, Tuple

import numpy as np

from ..errors import ParamsInfeasible
from ..models.graph import Graph
from ..models.instance import Instance, MinMaxInstance, TwoStageInstance
from ..models.problems import SetCoverInstance


def random_connected_graph(n: int, m: int, rng: np.random.Generator) -> Graph:
    """Random spanning tree skeleton plus m - (n - 1) distinct extra edges."""
    order = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        parent = order[rng.integers(0, i)]
        u, v = sorted((int(order[i]), int(parent)))
        edges.add((u, v))

    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra = m - (n - 1)
    if extra:
        picks = rng.choice(len(missing), size=extra, replace=False)
        edges.update(missing[int(k)] for k in picks)
    return Graph(num_vertices=n, edges=sorted(edges))


def gen_random(
    n: int,
    m: int,
    k: int,
    cost_range: Tuple[int, int] = (0, 9),
    two_stage: bool = False,
    seed: int = 0,
) -> Instance:
    """
    Connected simple random graph with uniform integer costs, fixed by seed.

    Raises:
        ParamsInfeasible: if no simple connected graph has these sizes
    """
    lo, hi = cost_range
    if n < 1 or k < 1:
        raise ParamsInfeasible(f"need n >= 1 and K >= 1 (n={n}, K={k})")
    if m < n - 1 or m > n * (n - 1) // 2:
        raise ParamsInfeasible(f"m={m} outside [{n - 1}, {n * (n - 1) // 2}] for n={n}")
    if lo > hi:
        raise ParamsInfeasible(f"empty cost range [{lo}, {hi}]")

    rng = np.random.default_rng(seed)
    graph = random_connected_graph(n, m, rng)
    scenarios = rng.integers(lo, hi + 1, size=(k, m)).tolist()
    name = f"random-n{n}-m{m}-k{k}-s{seed}"
    if two_stage:
        first = rng.integers(lo, hi + 1, size=m).tolist()
        return TwoStageInstance(name=name, graph=graph, first_stage=first, scenarios=scenarios)
    return MinMaxInstance(name=name, graph=graph, scenarios=scenarios)


def gen_random_set_cover(num_elements: int, num_subsets: int, seed: int = 0) -> SetCoverInstance:
    """
    Random subsets of random sizes; uncovered elements are added to random subsets.

    Raises:
        ParamsInfeasible: if either size is below 1
    """
    if num_elements < 1 or num_subsets < 1:
        raise ParamsInfeasible("need at least one element and one subset")
    rng = np.random.default_rng(seed)
    subsets: List[set] = []
    for _ in range(num_subsets):
        size = int(rng.integers(1, num_elements + 1))
        subsets.append(set(int(x) for x in rng.choice(num_elements, size=size, replace=False)))
    covered = set().union(*subsets)
    for x in range(num_elements):
        if x not in covered:
            subsets[int(rng.integers(0, num_subsets))].add(x)
    return SetCoverInstance(num_elements=num_elements, subsets=subsets)
