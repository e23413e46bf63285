"""
Label Cover -> min-max spanning tree construction.

Every Label Cover edge (v, w) becomes a component of paths
v - u_{a,b} - w^v, one per admissible pair (a, b). The edge v - u_{a,b} is a
label edge assigning a to v and b to w; u_{a,b} - w^v is a dummy edge. A hub
vertex s joins every v by a dummy edge. Dummy edges cost 0 everywhere; each
scenario prices one g-tuple of pairwise label-distinct label edges at 1.

Layout: vertex 0 is s, vertices 1..|V| are the left vertices, then per
component its u vertices in pair order followed by w^v. Edges: hub edges
first, then per component per pair the label edge and its dummy edge.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Tuple

from ..errors import LabelingNotTotal, ParamsInfeasible, ScenarioBlowup
from ..models.base import EdgeSet
from ..models.graph import Graph
from ..models.instance import MinMaxInstance
from ..models.problems import LabelCoverInstance, Labeling
from ..models.report import InstanceMetadata
from ..utils.config import settings
from ..utils.logging import logger


@dataclass(frozen=True)
class LabelEdge:
    """A label edge with the assignment it encodes."""
    index: int
    component: int
    v: int
    w: int
    a: int
    b: int


@dataclass
class LabelCoverLayout:
    """Vertex and edge indices of the constructed graph."""

    graph: Graph
    hub_edges: List[int]
    dummy_edges: List[int]
    label_edges: List[LabelEdge]
    component_edges: Dict[int, List[LabelEdge]]
    right_copies: Dict[int, int]

    @classmethod
    def build(cls, lc: LabelCoverInstance) -> "LabelCoverLayout":
        edges: List[Tuple[int, int]] = []
        hub_edges, dummy_edges = [], []
        label_edges: List[LabelEdge] = []
        component_edges: Dict[int, List[LabelEdge]] = {}
        right_copies: Dict[int, int] = {}

        for v in range(lc.num_left):
            hub_edges.append(len(edges))
            edges.append((0, 1 + v))

        next_vertex = 1 + lc.num_left
        for k, lc_edge in enumerate(lc.edges):
            u_vertices = list(range(next_vertex, next_vertex + len(lc_edge.pairs)))
            w_copy = next_vertex + len(lc_edge.pairs)
            next_vertex = w_copy + 1
            right_copies[k] = w_copy
            component_edges[k] = []
            for (a, b), u in zip(lc_edge.pairs, u_vertices):
                label = LabelEdge(len(edges), k, lc_edge.v, lc_edge.w, a, b)
                edges.append((1 + lc_edge.v, u))
                dummy_edges.append(len(edges))
                edges.append((u, w_copy))
                label_edges.append(label)
                component_edges[k].append(label)

        graph = Graph(num_vertices=next_vertex, edges=edges)
        return cls(graph, hub_edges, dummy_edges, label_edges, component_edges, right_copies)


def _incident_components(lc: LabelCoverInstance) -> List[Tuple[str, int, List[int]]]:
    """(side, vertex, component indices) for every left then right vertex."""
    out = [("left", v, lc.get_left_components(v)) for v in range(lc.num_left)]
    out += [("right", w, lc.get_right_components(w)) for w in range(lc.num_right)]
    return out


def _label_of(edge: LabelEdge, side: str) -> int:
    return edge.a if side == "left" else edge.b


def _count_distinct_tuples(groups: List[Counter]) -> int:
    """Number of tuples, one label edge per component, with pairwise distinct labels."""
    ways: Dict[frozenset, int] = {frozenset(): 1}
    for group in groups:
        nxt: Dict[frozenset, int] = {}
        for used, count in ways.items():
            for label, multiplicity in group.items():
                if label in used:
                    continue
                key = used | {label}
                nxt[key] = nxt.get(key, 0) + count * multiplicity
        ways = nxt
    return sum(ways.values())


def label_cover_scenario_count(lc: LabelCoverInstance, g: int) -> int:
    """Scenario count of the construction before merging identical rows, zero scenario included."""
    layout = LabelCoverLayout.build(lc)
    return _raw_count(lc, layout, g)


def _raw_count(lc: LabelCoverInstance, layout: LabelCoverLayout, g: int) -> int:
    total = 1
    for side, _, components in _incident_components(lc):
        for subset in combinations(components, g):
            groups = [Counter(_label_of(e, side) for e in layout.component_edges[k]) for k in subset]
            total += _count_distinct_tuples(groups)
    return total


def _check_relations(lc: LabelCoverInstance, g: int) -> None:
    if g < 1:
        raise ParamsInfeasible(f"g must be at least 1, got {g}")
    for k, edge in enumerate(lc.edges):
        if len(edge.pairs) < 2:
            raise ParamsInfeasible(
                f"Label Cover edge {k} ({edge.v}, {edge.w}) has a single label pair; "
                "propagate forced labels before generating"
            )


def gen_label_cover_with_metadata(
    lc: LabelCoverInstance,
    g: int,
    scenario_cap: Optional[int] = None,
    name: str = "labelcover",
) -> Tuple[MinMaxInstance, InstanceMetadata]:
    """
    Build the min-max instance and its role sidecar.

    Raises:
        ParamsInfeasible: if g < 1 or some relation has fewer than 2 pairs
        ScenarioBlowup: if the raw scenario count exceeds the cap
    """
    _check_relations(lc, g)
    cap = settings.scenario_cap if scenario_cap is None else scenario_cap
    layout = LabelCoverLayout.build(lc)
    raw = _raw_count(lc, layout, g)
    if raw > cap:
        raise ScenarioBlowup(raw, cap)

    m = layout.graph.num_edges
    rows: List[Tuple[float, ...]] = []
    roles: List[dict] = []
    seen = set()
    for side, vertex, components in _incident_components(lc):
        for subset in combinations(components, g):
            for chosen in product(*(layout.component_edges[k] for k in subset)):
                labels = [_label_of(e, side) for e in chosen]
                if len(set(labels)) != len(labels):
                    continue
                row = [0.0] * m
                for e in chosen:
                    row[e.index] = 1.0
                key = tuple(row)
                if key in seen:
                    continue
                seen.add(key)
                rows.append(key)
                roles.append({"side": side, "vertex": vertex, "edges": sorted(e.index for e in chosen)})
    rows.append(tuple([0.0] * m))
    roles.append({"side": "zero", "vertex": None, "edges": []})

    logger.info(f"Label Cover construction: {layout.graph.num_vertices} vertices, {m} edges, "
                f"{len(rows)} scenarios ({raw} before merging)")

    inst = MinMaxInstance(name=name, graph=layout.graph, scenarios=rows)
    meta = InstanceMetadata(
        kind="labelcover",
        parameters={"g": g, "raw_scenario_count": raw, "scenario_count": len(rows)},
        edge_roles={
            "hub": layout.hub_edges,
            "dummy": layout.dummy_edges,
            "label": {str(e.index): [e.v, e.w, e.a, e.b] for e in layout.label_edges},
        },
        vertex_roles={
            "hub": 0,
            "left": {str(v): 1 + v for v in range(lc.num_left)},
            "right_copies": {str(k): w for k, w in layout.right_copies.items()},
        },
        scenario_roles=roles,
    )
    return inst, meta


def gen_label_cover(lc: LabelCoverInstance, g: int, scenario_cap: Optional[int] = None) -> MinMaxInstance:
    """Build the min-max instance of the Label Cover construction."""
    inst, _ = gen_label_cover_with_metadata(lc, g, scenario_cap)
    return inst


def labeling_to_tree(lc: LabelCoverInstance, g: int, labeling: Labeling) -> EdgeSet:
    """
    Spanning tree taking, per component, the first label edge the labeling satisfies.

    The tree is completed with every hub and dummy edge. `g` does not change
    the graph layout.

    Raises:
        LabelingNotTotal: if some Label Cover edge has no satisfied pair
    """
    layout = LabelCoverLayout.build(lc)
    tree = set(layout.hub_edges) | set(layout.dummy_edges)
    for k, lc_edge in enumerate(lc.edges):
        left = labeling.left.get(lc_edge.v, frozenset())
        right = labeling.right.get(lc_edge.w, frozenset())
        match = next((e for e in layout.component_edges[k] if e.a in left and e.b in right), None)
        if match is None:
            raise LabelingNotTotal(f"edge ({lc_edge.v}, {lc_edge.w}) has no satisfied label pair")
        tree.add(match.index)
    return frozenset(tree)
