"""
Spanning tree primitives: Kruskal, connectivity, enumeration and the matrix-tree count.
"""

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DisconnectedGraph, TooManyTrees
from ..models.base import EdgeSet
from ..models.graph import Graph
from ..utils.logging import logger
from .union_find import UnionFind


def connected_components(graph: Graph, active: Iterable[int]) -> Tuple[int, List[int]]:
    """
    Count the components of the subgraph (V, active).

    Returns:
        (count, labels) where labels[v] is the component id of vertex v,
        numbered in order of each component's smallest vertex.
    """
    uf = UnionFind(graph.num_vertices)
    for e in active:
        u, v = graph.edges[e]
        uf.union(u, v)
    return uf.count, uf.labels()


def contract(graph: Graph, edges: Iterable[int]) -> Tuple[List[int], int]:
    """Map every vertex to its component under `edges`; returns (labels, count)."""
    count, labels = connected_components(graph, edges)
    return labels, count


def is_spanning_tree(graph: Graph, t: Iterable[int]) -> bool:
    """True iff |t| = n - 1 and (V, t) is connected."""
    t = frozenset(t)
    if any(e < 0 or e >= graph.num_edges for e in t):
        return False
    if len(t) != graph.num_vertices - 1:
        return False
    count, _ = connected_components(graph, t)
    return count == 1


def kruskal_forest(
    graph: Graph,
    costs: Sequence[float],
    allowed: Optional[Iterable[int]] = None,
    forced: Optional[Iterable[int]] = None,
) -> Tuple[EdgeSet, UnionFind]:
    """
    Minimum spanning forest of the considered edges by Kruskal's algorithm.

    Ties are broken by ascending edge index, so on every cycle the
    costliest (then highest-index) edge is the one left out.

    Returns:
        (forest, union-find over the forest's components)
    """
    costs = np.asarray(costs, dtype=np.float64)
    uf = UnionFind(graph.num_vertices)
    chosen: List[int] = []

    if forced is not None:
        for e in sorted(forced):
            u, v = graph.edges[e]
            if not uf.union(u, v):
                raise ValueError(f"forced edges contain a cycle through edge {e}")
            chosen.append(e)

    candidates = np.arange(graph.num_edges)
    if allowed is not None:
        candidates = np.array(sorted(set(allowed)), dtype=np.int64)
    if candidates.size:
        order = candidates[np.argsort(costs[candidates], kind="stable")]
    else:
        order = candidates

    for e in order:
        if uf.count == 1:
            break
        u, v = graph.edges[int(e)]
        if uf.union(u, v):
            chosen.append(int(e))

    return frozenset(chosen), uf


def kruskal_mst(
    graph: Graph,
    costs: Sequence[float],
    allowed: Optional[Iterable[int]] = None,
    forced: Optional[Iterable[int]] = None,
) -> EdgeSet:
    """
    Minimum spanning tree by Kruskal's algorithm.

    Ties are broken by ascending edge index. `forced` edges are taken first
    (they must form a forest); only `allowed` edges (default: all) are
    considered afterwards.

    Raises:
        DisconnectedGraph: if the considered edges do not span the graph
    """
    tree, uf = kruskal_forest(graph, costs, allowed=allowed, forced=forced)
    if uf.count != 1:
        raise DisconnectedGraph(f"edges span {uf.count} components, not 1")
    return tree


def count_spanning_trees(graph: Graph) -> int:
    """Number of spanning trees by the matrix-tree theorem (parallel edges counted)."""
    n = graph.num_vertices
    if n == 1:
        return 1
    laplacian = np.zeros((n, n), dtype=np.float64)
    for u, v in graph.edges:
        laplacian[u, u] += 1
        laplacian[v, v] += 1
        laplacian[u, v] -= 1
        laplacian[v, u] -= 1
    return int(round(np.linalg.det(laplacian[1:, 1:])))


def enumerate_spanning_trees(graph: Graph, limit: int) -> Iterator[EdgeSet]:
    """
    Yield every spanning tree exactly once.

    Trees come in lexicographic order of their sorted edge-index tuples
    (include-before-exclude search over edges in index order).

    Raises:
        DisconnectedGraph: if the graph is not connected
        TooManyTrees: once more than `limit` trees would be produced
    """
    n, m = graph.num_vertices, graph.num_edges
    count, _ = connected_components(graph, range(m))
    if count != 1:
        raise DisconnectedGraph(f"graph has {count} connected components")

    needed = n - 1
    chosen: List[int] = []

    def can_complete(uf: UnionFind, start: int) -> bool:
        probe = uf.copy()
        for e in range(start, m):
            u, v = graph.edges[e]
            probe.union(u, v)
            if probe.count == 1:
                return True
        return probe.count == 1

    def extend(index: int, uf: UnionFind) -> Iterator[EdgeSet]:
        if len(chosen) == needed:
            yield frozenset(chosen)
            return
        if m - index < needed - len(chosen):
            return
        u, v = graph.edges[index]
        if not uf.connected(u, v):
            child = uf.copy()
            child.union(u, v)
            chosen.append(index)
            yield from extend(index + 1, child)
            chosen.pop()
        if can_complete(uf, index + 1):
            yield from extend(index + 1, uf)

    produced = 0
    for tree in extend(0, UnionFind(n)):
        if produced >= limit:
            logger.warning(f"Spanning tree enumeration stopped at limit {limit}")
            raise TooManyTrees(limit)
        produced += 1
        yield tree
