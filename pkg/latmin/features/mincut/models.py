from collections import deque
from typing import List, Set


class FlowNetwork:
    """Residual network solved with Dinic's level-graph / blocking-flow scheme.

    Arcs are stored in pairs: arc ``a`` and its reverse ``a ^ 1``.
    """

    def __init__(self, node_count: int):
        self.node_count = node_count
        self._adj: List[List[int]] = [[] for _ in range(node_count)]
        self._to: List[int] = []
        self._cap: List[int] = []
        self._initial: List[int] = []

    def add_arc(self, u: int, v: int, cap: int, reverse_cap: int = 0) -> int:
        """Add u→v with capacity ``cap`` (and v→u with ``reverse_cap``); return the arc id."""
        arc = len(self._to)
        self._to += [v, u]
        self._cap += [cap, reverse_cap]
        self._initial += [cap, reverse_cap]
        self._adj[u].append(arc)
        self._adj[v].append(arc + 1)
        return arc

    def flow(self, arc: int) -> int:
        """Net flow along ``arc`` (negative when it runs backwards)."""
        return self._initial[arc] - self._cap[arc]

    def residual(self, arc: int) -> int:
        return self._cap[arc]

    def _levels(self, source: int, sink: int) -> List[int]:
        level = [-1] * self.node_count
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for arc in self._adj[u]:
                v = self._to[arc]
                if self._cap[arc] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _blocking_flow(self, source: int, sink: int, level: List[int]) -> int:
        cursor = [0] * self.node_count
        total = 0
        while True:
            path: List[int] = []
            u = source
            while u != sink:
                adj = self._adj[u]
                advanced = False
                while cursor[u] < len(adj):
                    arc = adj[cursor[u]]
                    v = self._to[arc]
                    if self._cap[arc] > 0 and level[v] == level[u] + 1:
                        path.append(arc)
                        u = v
                        advanced = True
                        break
                    cursor[u] += 1
                if advanced:
                    continue
                if u == source:
                    return total
                # dead end: prune and retreat one arc
                level[u] = -1
                arc = path.pop()
                u = self._to[arc ^ 1]
                cursor[u] += 1
            pushed = min(self._cap[arc] for arc in path)
            for arc in path:
                self._cap[arc] -= pushed
                self._cap[arc ^ 1] += pushed
            total += pushed

    def max_flow(self, source: int, sink: int) -> int:
        if source == sink:
            raise ValueError("source and sink coincide")
        total = 0
        while True:
            level = self._levels(source, sink)
            if level[sink] < 0:
                return total
            total += self._blocking_flow(source, sink, level)

    def reachable(self, source: int) -> Set[int]:
        """Nodes reachable from ``source`` in the residual graph."""
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for arc in self._adj[u]:
                v = self._to[arc]
                if self._cap[arc] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen
