"""
Shared fixtures for the solver test scripts.
"""

import sys
from pathlib import Path
from typing import List

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from robust_mst.exact import brute_force_minmax  # noqa: E402
from robust_mst.models import (  # noqa: E402
    CnfFormula,
    Graph,
    MinMaxInstance,
    SetCoverInstance,
    TwoStageInstance,
)
from robust_mst.reductions import gen_random  # noqa: E402


TRIANGLE_EDGES = [(0, 1), (1, 2), (0, 2)]


@pytest.fixture
def triangle() -> Graph:
    return Graph(num_vertices=3, edges=TRIANGLE_EDGES)


@pytest.fixture
def triangle_two_scenarios(triangle) -> MinMaxInstance:
    """S1 = (2, 0, 0), S2 = (0, 2, 0): every tree has value 2."""
    return MinMaxInstance(name="triangle-2", graph=triangle, scenarios=[[2, 0, 0], [0, 2, 0]])


@pytest.fixture
def triangle_unit(triangle) -> MinMaxInstance:
    return MinMaxInstance(name="triangle-unit", graph=triangle, scenarios=[[1, 1, 1]])


@pytest.fixture
def triangle_two_stage(triangle) -> TwoStageInstance:
    """First stage (1, 1, 1), one free scenario."""
    return TwoStageInstance(name="triangle-2s", graph=triangle, first_stage=[1, 1, 1], scenarios=[[0, 0, 0]])


@pytest.fixture
def set_cover_example() -> SetCoverInstance:
    """U = {0, 1, 2}, U1 = {0, 1}, U2 = {1, 2}, U3 = {2}; minimum cover size 2."""
    return SetCoverInstance(num_elements=3, subsets=[[0, 1], [1, 2], [2]])


@pytest.fixture
def sat_formula() -> CnfFormula:
    """(x1 or x2 or x3) and (not x1 or not x2 or not x3)."""
    return CnfFormula(num_variables=3, clauses=[[1, 2, 3], [-1, -2, -3]])


@pytest.fixture
def unsat_formula() -> CnfFormula:
    """All eight sign patterns over x1, x2, x3."""
    clauses = [
        [s1 * 1, s2 * 2, s3 * 3]
        for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)
    ]
    return CnfFormula(num_variables=3, clauses=clauses)


def random_corpus(count: int, two_stage: bool = False, base_seed: int = 0) -> List:
    """Seeded random instances with n <= 7 and K <= 4."""
    out = []
    for i in range(count):
        seed = base_seed + i
        n = 3 + i % 5
        max_m = n * (n - 1) // 2
        m = min(max_m, n - 1 + (i * 7) % (max_m - n + 2))
        k = 1 + i % 4
        out.append(gen_random(n, m, k, (0, 9), two_stage=two_stage, seed=seed))
    return out


@pytest.fixture(scope="session")
def minmax_corpus() -> List[MinMaxInstance]:
    return random_corpus(20)


@pytest.fixture(scope="session")
def two_stage_corpus() -> List[TwoStageInstance]:
    return random_corpus(12, two_stage=True, base_seed=1000)


def small_two_stage_corpus(count: int, base_seed: int = 2000) -> List[TwoStageInstance]:
    """Seeded 2-stage instances with m <= 12 and K <= 3."""
    out = []
    for i in range(count):
        n = 3 + i % 4
        max_m = min(12, n * (n - 1) // 2)
        m = n - 1 + (i * 7) % (max_m - n + 2)
        k = 1 + i % 3
        out.append(gen_random(n, m, k, (0, 9), two_stage=True, seed=base_seed + i))
    return out


@pytest.fixture(scope="session")
def acceptance_corpus() -> List[MinMaxInstance]:
    return random_corpus(200, base_seed=10_000)


@pytest.fixture(scope="session")
def acceptance_optima(acceptance_corpus) -> List[float]:
    return [brute_force_minmax(inst).value for inst in acceptance_corpus]
