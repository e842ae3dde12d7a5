"""Immutable simple-graph core: construction, serialization, generators.

Vertices are integers ``0..n-1`` and edges are stored as sorted pairs.
Adjacency is exposed both as sorted neighbor tuples and as bitmasks; the
bitmask form is what the exponential solvers in the sibling modules run on.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import FormatError, GraphError

Edge = tuple[int, int]

STANDARD_KINDS = ("path", "cycle", "complete")


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Bipartition:
    """A two-coloring witness: every edge joins side_a to side_b."""

    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    bipartition: Bipartition | None = field(default=None, compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def new_graph(n: int, edges: Iterable[tuple[int, int]],
              bipartition: Bipartition | None = None) -> Graph:
    """Build a validated simple graph; rejects loops and out-of-range endpoints."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    normed = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u},{v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        normed.add(norm_edge(u, v))
    return Graph(n, frozenset(normed), bipartition)


# ---------------------------------------------------------------------------
# standard families

def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path graph needs n >= 1")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle graph needs n >= 3")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def standard_graphs(kind: str, n: int) -> Graph:
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "complete":
        return complete_graph(n)
    raise GraphError(f"unknown standard graph kind {kind!r}; expected one of {STANDARD_KINDS}")


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with side A on vertices 0..a-1 and side B on a..a+b-1."""
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides non-empty")
    part = Bipartition(frozenset(range(a)), frozenset(range(a, a + b)))
    return new_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)], part)


def random_connected(n: int, p: float, seed: int, max_attempts: int = 10_000) -> Graph:
    """Sample G(n, p) repeatedly until connected; deterministic in (n, p, seed)."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0,1], got {p}")
    if n < 1:
        raise GraphError("random_connected needs n >= 1")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(max_attempts):
        g = Graph(n, frozenset(e for e in pairs if rng.random() < p))
        if is_connected(g):
            return g
    raise GraphError(
        f"no connected sample in {max_attempts} attempts for n={n}, p={p}; raise p")


# ---------------------------------------------------------------------------
# elementary predicates

def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    adj = g.adj_mask
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= adj[v]
        frontier = grow & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_bipartite(g: Graph) -> Bipartition | None:
    """Two-color the graph; returns the witness or None on an odd cycle."""
    color: list[int | None] = [None] * g.n
    for root in range(g.n):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for u in g.adj[v]:
                if color[u] is None:
                    color[u] = 1 - color[v]  # type: ignore[operator]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    return Bipartition(side_a, frozenset(range(g.n)) - side_a)


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62) and a plain edge-list text format

def emit_graph6(g: Graph) -> str:
    if not 0 <= g.n <= 62:
        raise FormatError(f"short-form graph6 supports 0 <= n <= 62, got n={g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj_mask[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise FormatError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise FormatError(f"byte {ch!r} outside the graph6 alphabet")
        vals.append(v)
    n = vals[0]
    if n == 63:
        raise FormatError("long-form graph6 header (n > 62) not supported")
    npairs = n * (n - 1) // 2
    want = (npairs + 5) // 6
    if len(vals) - 1 != want:
        raise FormatError(
            f"graph6 body for n={n} needs {want} bytes, got {len(vals) - 1}")
    edges = []
    pos = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for v in vals[1:]:
        for shift in range(5, -1, -1):
            bit = (v >> shift) & 1
            if pos < npairs:
                if bit:
                    edges.append(pairs[pos])
            elif bit:
                raise FormatError("nonzero padding bits in graph6 tail")
            pos += 1
    return Graph(n, frozenset(edges))


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise FormatError("empty edge-list input")
    try:
        header = [int(tok) for tok in rows[0]]
    except ValueError as exc:
        raise FormatError(f"bad edge-list header {rows[0]!r}") from exc
    if len(header) != 2:
        raise FormatError("edge-list header must be 'n m'")
    n, m = header
    if len(rows) - 1 != m:
        raise FormatError(f"edge-list promises {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise FormatError(f"bad edge line {' '.join(row)!r}")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError as exc:
            raise FormatError(f"bad edge line {' '.join(row)!r}") from exc
        edges.append((u, v))
    try:
        return new_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc
