"""
Set Cover -> 2-stage spanning tree, a cost-preserving construction.

Vertices: u_i = i for the m subsets, element j at m + j, root r = m + n.
The graph is complete. First stage: (r, u_i) costs 1, every other edge
m + 1. Scenario j prices every edge crossing T_j = {j} + {u_i : j in U_i}
at m + 1 and every other edge at 0.
"""

from itertools import combinations
from typing import Iterable, List, Tuple

from ..errors import NotACover, SolutionUsesForbiddenEdge
from ..graphs.spanning import kruskal_mst
from ..instances.evaluate import validate_two_stage_solution
from ..models.graph import Graph
from ..models.instance import TwoStageInstance
from ..models.problems import SetCoverInstance
from ..models.report import InstanceMetadata
from ..models.solution import TwoStageSolution


def root_vertex(sc: SetCoverInstance) -> int:
    return sc.num_subsets + sc.num_elements


def _edges(sc: SetCoverInstance) -> List[Tuple[int, int]]:
    r = root_vertex(sc)
    hub = [(i, r) for i in range(sc.num_subsets)]
    hub_set = set(hub)
    rest = [(u, v) for u, v in combinations(range(r + 1), 2) if (u, v) not in hub_set]
    return hub + rest


def scenario_side(sc: SetCoverInstance, j: int) -> frozenset:
    """T_j: element j and every subset vertex containing it."""
    m = sc.num_subsets
    return frozenset([m + j] + [i for i in range(m) if j in sc.subsets[i]])


def gen_set_cover_with_metadata(sc: SetCoverInstance, name: str = "setcover") -> Tuple[TwoStageInstance, InstanceMetadata]:
    """Build the 2-stage instance and its role sidecar."""
    m, n = sc.num_subsets, sc.num_elements
    graph = Graph(num_vertices=m + n + 1, edges=_edges(sc))
    high = float(m + 1)
    first = [1.0 if e < m else high for e in range(graph.num_edges)]

    scenarios = []
    for j in range(n):
        crossing = set(graph.cut_edges(scenario_side(sc, j)))
        scenarios.append([high if e in crossing else 0.0 for e in range(graph.num_edges)])

    inst = TwoStageInstance(name=name, graph=graph, first_stage=first, scenarios=scenarios)
    meta = InstanceMetadata(
        kind="setcover",
        parameters={"num_elements": n, "num_subsets": m},
        edge_roles={"root_subset": {str(i): i for i in range(m)}},
        vertex_roles={
            "subsets": list(range(m)),
            "elements": list(range(m, m + n)),
            "root": root_vertex(sc),
        },
        scenario_roles=[{"element": j, "side": sorted(scenario_side(sc, j))} for j in range(n)],
    )
    return inst, meta


def gen_set_cover(sc: SetCoverInstance) -> TwoStageInstance:
    """Build the 2-stage instance of the Set Cover construction."""
    inst, _ = gen_set_cover_with_metadata(sc)
    return inst


def cover_to_solution(sc: SetCoverInstance, cover: Iterable[int]) -> TwoStageSolution:
    """
    First stage (r, u_i) for every chosen subset; zero-cost completions.

    Raises:
        NotACover: if the chosen subsets miss an element
    """
    cover = sorted(set(cover))
    if not cover or not sc.covers(cover):
        raise NotACover(f"subsets {cover} do not cover the ground set")
    inst = gen_set_cover(sc)
    # Edge i is (u_i, r)
    e1 = frozenset(cover)
    completions = {}
    for s in range(inst.num_scenarios):
        tree = kruskal_mst(inst.graph, inst.cost_matrix[s], forced=e1)
        completions[s] = tree - e1
    return TwoStageSolution(e1=e1, completions=completions)


def solution_to_cover(sc: SetCoverInstance, sol: TwoStageSolution) -> Tuple[int, ...]:
    """
    Subsets whose root edge is bought in the first stage.

    Raises:
        InvalidTwoStageSolution: if the solution is structurally invalid
        SolutionUsesForbiddenEdge: if it pays m + 1 for any edge
    """
    inst = gen_set_cover(sc)
    validate_two_stage_solution(inst, sol)
    m = sc.num_subsets
    forbidden = [e for e in sorted(sol.e1) if e >= m]
    if forbidden:
        raise SolutionUsesForbiddenEdge(f"first stage uses edge {forbidden[0]} of cost {m + 1}")
    for s, completion in sorted(sol.completions.items()):
        priced = [e for e in sorted(completion) if inst.cost_matrix[s, e] > 0]
        if priced:
            raise SolutionUsesForbiddenEdge(f"scenario {s} completion uses edge {priced[0]} of cost {m + 1}")

    cover = tuple(sorted(sol.e1))
    if not sc.covers(cover):
        raise NotACover(f"subsets {list(cover)} do not cover the ground set")
    return cover
