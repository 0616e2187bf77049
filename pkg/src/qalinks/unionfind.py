class UnionFind:
    """Disjoint sets over arbitrary hashable items, with path halving."""

    def __init__(self, items=()):
        self.parent = {x: x for x in items}
        self.n_sets = len(self.parent)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.n_sets += 1

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        # keep the smaller item as root so representatives are deterministic
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.n_sets -= 1
        return True

    def groups(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out
