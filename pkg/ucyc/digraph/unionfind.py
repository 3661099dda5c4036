"""Union-find over vertex indices, used for weak connectivity."""

from typing import Dict, List


class UnionFind:
    """Disjoint sets of the integers 0..size-1 with path compression and union by
    size.
    """

    def __init__(self, size: int):
        self.parents = list(range(size))
        self.sizes = [1] * size
        self.component_count = size

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.sizes[ra] < self.sizes[rb]:
            ra, rb = rb, ra
        self.parents[rb] = ra
        self.sizes[ra] += self.sizes[rb]
        self.component_count -= 1

    def components(self) -> List[List[int]]:
        """Members of each set, sets ordered by their least member."""
        res: Dict[int, List[int]] = {}
        for i in range(len(self.parents)):
            res.setdefault(self.find(i), []).append(i)
        return list(res.values())
