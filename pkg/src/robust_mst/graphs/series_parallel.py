"""
Two-terminal series-parallel recognition by reduction.
"""

from typing import Dict, Optional, Set

from ..models.graph import Graph


def is_series_parallel(graph: Graph, source: int = 0, sink: Optional[int] = None) -> bool:
    """
    True iff repeated parallel merges and series contractions reduce the
    graph to the single edge (source, sink). The sink defaults to the
    highest-numbered vertex.
    """
    sink = graph.num_vertices - 1 if sink is None else sink
    if source == sink:
        return False

    # Parallel edges collapse as the adjacency is built
    adj: Dict[int, Set[int]] = {v: set() for v in range(graph.num_vertices)}
    for u, v in graph.edges:
        adj[u].add(v)
        adj[v].add(u)

    pending = [v for v in adj if v not in (source, sink)]
    while pending:
        x = pending.pop()
        if x not in adj:
            continue
        if len(adj[x]) != 2:
            if len(adj[x]) < 2:
                return False
            continue
        a, b = adj.pop(x)
        adj[a].discard(x)
        adj[b].discard(x)
        adj[a].add(b)
        adj[b].add(a)
        pending.extend(v for v in (a, b) if v not in (source, sink))

    return set(adj) == {source, sink} and adj[source] == {sink}
