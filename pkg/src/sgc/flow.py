"""Max-flow on vertex-split networks: internally disjoint paths, separators, fans.

Every vertex v is split into an entry node 2v and an exit node 2v+1 joined by
a unit-capacity arc, so integral flow counts internally vertex-disjoint paths.
Augmenting paths are found with BFS, which is plenty at the scale this package
targets (flow values bounded by vertex degrees on small graphs).
"""
from __future__ import annotations

from collections import deque

from .graphs import Graph


class _Net:
    def __init__(self, size: int) -> None:
        self.arcs: list[list[list[int]]] = [[] for _ in range(size)]  # [to, cap, rev]
        self.forward: list[tuple[int, int, int]] = []  # (tail, index, original cap)

    def add(self, a: int, b: int, cap: int) -> None:
        self.arcs[a].append([b, cap, len(self.arcs[b])])
        self.arcs[b].append([a, 0, len(self.arcs[a]) - 1])
        self.forward.append((a, len(self.arcs[a]) - 1, cap))

    def augment(self, s: int, t: int) -> int:
        """Push one augmenting path of flow from s to t; returns the amount pushed."""
        prev: dict[int, tuple[int, int]] = {s: (-1, -1)}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if x == t:
                break
            for idx, arc in enumerate(self.arcs[x]):
                if arc[1] > 0 and arc[0] not in prev:
                    prev[arc[0]] = (x, idx)
                    queue.append(arc[0])
        if t not in prev:
            return 0
        # trace back for the bottleneck, then apply it
        amount = None
        x = t
        while x != s:
            px, pidx = prev[x]
            cap = self.arcs[px][pidx][1]
            amount = cap if amount is None else min(amount, cap)
            x = px
        x = t
        while x != s:
            px, pidx = prev[x]
            arc = self.arcs[px][pidx]
            arc[1] -= amount
            self.arcs[x][arc[2]][1] += amount
            x = px
        return amount  # type: ignore[return-value]

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        total = 0
        while limit is None or total < limit:
            pushed = self.augment(s, t)
            if pushed == 0:
                break
            total += pushed
        return total

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for arc in self.arcs[x]:
                if arc[1] > 0 and arc[0] not in seen:
                    seen.add(arc[0])
                    queue.append(arc[0])
        return seen

    def used(self) -> dict[tuple[int, int], int]:
        """Remaining flow units per forward arc, keyed by (tail, arc index)."""
        flows = {}
        for tail, idx, cap in self.forward:
            f = cap - self.arcs[tail][idx][1]
            if f > 0:
                flows[(tail, idx)] = f
        return flows


def _entry(v: int) -> int:
    return 2 * v


def _exit(v: int) -> int:
    return 2 * v + 1


def _build(g: Graph, edge_cap: int, no_exit: frozenset[int] = frozenset(),
           extra_nodes: int = 0, block_entry: int | None = None) -> _Net:
    net = _Net(2 * g.n + extra_nodes)
    for v in range(g.n):
        if v not in no_exit:
            net.add(_entry(v), _exit(v), 1)
    for u, v in sorted(g.edges):
        if v != block_entry:
            net.add(_exit(u), _entry(v), edge_cap)
        if u != block_entry:
            net.add(_exit(v), _entry(u), edge_cap)
    return net


def _walk_paths(net: _Net, source: int, sink: int, start_vertex: int) -> list[list[int]]:
    """Decompose integral flow into vertex paths from the source's vertex."""
    flows = net.used()
    outgoing: dict[int, list[tuple[int, int]]] = {}
    for (tail, idx), _ in sorted(flows.items()):
        outgoing.setdefault(tail, []).append((tail, idx))
    paths = []
    while True:
        options = [key for key in outgoing.get(source, []) if flows.get(key, 0) > 0]
        if not options:
            break
        path = [start_vertex]
        node = source
        key = options[0]
        while True:
            flows[key] -= 1
            node = net.arcs[key[0]][key[1]][0]
            if node == sink:
                break
            if node % 2 == 0:  # an entry node: record the vertex
                path.append(node // 2)
            key = next(k for k in outgoing.get(node, []) if flows.get(k, 0) > 0)
        paths.append(path)
    return paths


def disjoint_paths(g: Graph, s: int, t: int, limit: int | None = None) -> list[list[int]]:
    """A maximum set (optionally capped) of internally vertex-disjoint s-t paths."""
    if s == t:
        raise ValueError("endpoints must differ")
    net = _build(g, edge_cap=1, block_entry=s)
    net.max_flow(_exit(s), _entry(t), limit)
    paths = _walk_paths(net, _exit(s), _entry(t), s)
    for p in paths:
        p.append(t)
    return paths


def min_vertex_separator(g: Graph, s: int, t: int) -> tuple[int, frozenset[int]]:
    """Menger for a non-adjacent pair: (local connectivity, witness separator)."""
    if g.has_edge(s, t):
        raise ValueError("separator queries need a non-adjacent pair")
    big = g.n + 1
    net = _build(g, edge_cap=big, block_entry=s)
    value = net.max_flow(_exit(s), _entry(t))
    reach = net.reachable(_exit(s))
    sep = frozenset(v for v in range(g.n)
                    if _entry(v) in reach and _exit(v) not in reach)
    return value, sep


def max_fan(g: Graph, origin: int, targets: frozenset[int],
            limit: int | None = None) -> list[list[int]]:
    """Paths from ``origin`` to distinct targets, pairwise sharing only the origin
    and touching the target set exactly at their final vertex."""
    if origin in targets:
        raise ValueError("origin may not be a target")
    if not targets:
        return []
    sink = 2 * g.n
    net = _build(g, edge_cap=1, no_exit=frozenset(targets),
                 extra_nodes=1, block_entry=origin)
    for t in sorted(targets):
        net.add(_entry(t), sink, 1)
    net.max_flow(_exit(origin), sink, limit)
    return _walk_paths(net, _exit(origin), sink, origin)
