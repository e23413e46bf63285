"""
Disjoint-set forest over vertices 0..n-1.
"""

from typing import List


class UnionFind:
    """Union by rank with path compression; tracks the number of components."""

    def __init__(self, n: int):
        self.parent: List[int] = list(range(n))
        self.rank: List[int] = [0] * n
        self.count = n

    def find(self, x: int) -> int:
        """Find the root of x, compressing the path."""
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; False if they were already joined."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        self.count -= 1
        return True

    def connected(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def copy(self) -> "UnionFind":
        """Independent copy of the current partition."""
        clone = UnionFind.__new__(UnionFind)
        clone.parent = list(self.parent)
        clone.rank = list(self.rank)
        clone.count = self.count
        return clone

    def labels(self) -> List[int]:
        """Component ids numbered in order of each component's smallest vertex."""
        ids = {}
        out = []
        for v in range(len(self.parent)):
            root = self.find(v)
            if root not in ids:
                ids[root] = len(ids)
            out.append(ids[root])
        return out
