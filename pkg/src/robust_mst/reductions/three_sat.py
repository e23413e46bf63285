"""
3-SAT -> min-max spanning tree with negative costs.

Clause i is a gadget s_i, v_0, v_1, v_2, t_i with literal edges (s_i, v_j)
and closing edges (v_j, t_i); gadgets are chained by t_i = s_{i+1}. One
scenario per pair of contradictory literal occurrences prices those two
literal edges at 4m - 1 and every other edge at -1.
"""

from itertools import combinations, product
from typing import Dict, List, Optional, Tuple

from ..errors import AssignmentDoesNotSatisfy
from ..models.base import EdgeSet
from ..models.graph import Graph
from ..models.instance import MinMaxInstance
from ..models.problems import CnfFormula
from ..models.report import InstanceMetadata
from ..utils.logging import logger


def clause_vertices(i: int) -> Tuple[int, List[int], int]:
    """(s_i, [v_0, v_1, v_2], t_i) of clause i."""
    return 4 * i, [4 * i + 1 + j for j in range(3)], 4 * (i + 1)


def literal_edge(i: int, j: int) -> int:
    """Index of the edge (s_i, v_j)."""
    return 6 * i + j


def closing_edge(i: int, j: int) -> int:
    """Index of the edge (v_j, t_i)."""
    return 6 * i + 3 + j


def _graph(phi: CnfFormula) -> Graph:
    edges = []
    for i in range(phi.num_clauses):
        s, vs, t = clause_vertices(i)
        edges.extend((s, v) for v in vs)
        edges.extend((v, t) for v in vs)
    return Graph(num_vertices=4 * phi.num_clauses + 1, edges=edges)


def contradictory_pairs(phi: CnfFormula) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Unordered pairs of occurrences (clause, position) holding x and not-x."""
    occurrences = [(i, j) for i in range(phi.num_clauses) for j in range(3)]
    pairs = []
    for (i, j), (k, l) in combinations(occurrences, 2):
        if phi.clauses[i][j] == -phi.clauses[k][l]:
            pairs.append(((i, j), (k, l)))
    return pairs


def gen_3sat_with_metadata(phi: CnfFormula, name: str = "3sat") -> Tuple[MinMaxInstance, InstanceMetadata]:
    """Build the instance and its role sidecar."""
    graph = _graph(phi)
    m = phi.num_clauses
    high = float(4 * m - 1)

    rows = []
    roles = []
    for (i, j), (k, l) in contradictory_pairs(phi):
        row = [-1.0] * graph.num_edges
        row[literal_edge(i, j)] = high
        row[literal_edge(k, l)] = high
        rows.append(row)
        roles.append({"occurrences": [[i, j], [k, l]], "variable": abs(phi.clauses[i][j])})

    logger.info(f"3-SAT construction: {graph.num_vertices} vertices, {graph.num_edges} edges, {len(rows)} scenarios")
    inst = MinMaxInstance(name=name, graph=graph, scenarios=rows)
    meta = InstanceMetadata(
        kind="3sat",
        parameters={"num_variables": phi.num_variables, "num_clauses": m},
        edge_roles={
            "literal": {
                str(literal_edge(i, j)): [i, j, phi.clauses[i][j]]
                for i in range(m) for j in range(3)
            },
            "closing": [closing_edge(i, j) for i in range(m) for j in range(3)],
        },
        vertex_roles={
            "chain": [clause_vertices(i)[0] for i in range(m)] + [clause_vertices(m - 1)[2]],
        },
        scenario_roles=roles,
    )
    return inst, meta


def gen_3sat(phi: CnfFormula) -> MinMaxInstance:
    """Build the min-max instance of the 3-SAT construction."""
    inst, _ = gen_3sat_with_metadata(phi)
    return inst


def assignment_to_tree(phi: CnfFormula, assignment: Dict[int, bool]) -> EdgeSet:
    """
    Per clause, the first true literal's edge plus the three closing edges.

    Raises:
        AssignmentDoesNotSatisfy: if some clause has no true literal
    """
    tree = set()
    for i, clause in enumerate(phi.clauses):
        j = next((j for j, lit in enumerate(clause) if assignment.get(abs(lit), False) == (lit > 0)), None)
        if j is None:
            raise AssignmentDoesNotSatisfy(f"clause {i} {list(clause)} is false")
        tree.add(literal_edge(i, j))
        tree.update(closing_edge(i, l) for l in range(3))
    return frozenset(tree)


def brute_force_satisfiable(phi: CnfFormula) -> Optional[Dict[int, bool]]:
    """First satisfying assignment in lexicographic order (False before True), or None."""
    variables = range(1, phi.num_variables + 1)
    for values in product((False, True), repeat=phi.num_variables):
        assignment = dict(zip(variables, values))
        if phi.is_satisfied_by(assignment):
            return assignment
    return None
