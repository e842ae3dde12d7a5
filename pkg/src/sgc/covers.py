"""Exact vertex covers by pairwise disjoint paths and by (possibly shared) cycles.

Path covers partition the vertex set into vertex-disjoint paths; singleton
paths are allowed.  Cycle covers only have to touch every vertex, so entries
may overlap, and degenerate entries of one vertex or one edge are permitted.

Both solvers branch on the entry that covers the smallest uncovered vertex.
Failed (uncovered-set, remaining-count) states are memoized, which keeps the
searches exhaustive while avoiding order-duplicated work.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CertificateError
from .graphs import Graph, bits, is_bipartite
from .search import Budget, Decision, OutOfBudget, as_budget


@dataclass(frozen=True)
class PathCover:
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CycleCover:
    cycles: tuple[tuple[int, ...], ...]


def validate_path_cover(g: Graph, cover: PathCover) -> None:
    seen = 0
    for path in cover.paths:
        if not path:
            raise CertificateError("empty path in cover")
        pmask = 0
        for v in path:
            if not 0 <= v < g.n:
                raise CertificateError(f"vertex {v} out of range")
            pmask |= 1 << v
        if pmask.bit_count() != len(path):
            raise CertificateError(f"repeated vertex in path {path}")
        if pmask & seen:
            raise CertificateError("paths are not vertex-disjoint")
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                raise CertificateError(f"({a},{b}) is not an edge")
        seen |= pmask
    if seen != (1 << g.n) - 1:
        raise CertificateError("path cover misses vertices")


def validate_cycle_cover(g: Graph, cover: CycleCover) -> None:
    seen = 0
    for entry in cover.cycles:
        if len(set(entry)) != len(entry):
            raise CertificateError(f"repeated vertex in cycle entry {entry}")
        for v in entry:
            if not 0 <= v < g.n:
                raise CertificateError(f"vertex {v} out of range")
            seen |= 1 << v
        if len(entry) == 2 and not g.has_edge(entry[0], entry[1]):
            raise CertificateError(f"degenerate entry {entry} is not an edge")
        if len(entry) >= 3:
            for a, b in zip(entry, entry[1:] + entry[:1]):
                if not g.has_edge(a, b):
                    raise CertificateError(f"({a},{b}) is not an edge")
    if seen != (1 << g.n) - 1:
        raise CertificateError("cycle cover misses vertices")


# ---------------------------------------------------------------------------
# shared search plumbing

def mask_components(adj: tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the induced subgraph on ``alive``, as masks."""
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        seen = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            frontier = grow & alive & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def ham_path_in_mask(g: Graph, alive: int, budget: Budget) -> tuple[int, ...] | None:
    """A Hamiltonian path of the induced subgraph on ``alive`` via bitmask DP."""
    verts = list(bits(alive))
    nv = len(verts)
    if nv == 0:
        return ()
    if nv == 1:
        return (verts[0],)
    index = {v: i for i, v in enumerate(verts)}
    cadj = [0] * nv
    for i, v in enumerate(verts):
        for u in bits(g.adj_mask[v] & alive):
            cadj[i] |= 1 << index[u]
    budget.spend(1 << nv)
    full = (1 << nv) - 1
    ends = [0] * (full + 1)
    for i in range(nv):
        ends[1 << i] = 1 << i
    for mask in range(1, full + 1):
        reach = ends[mask]
        if not reach:
            continue
        for e in bits(reach):
            for b in bits(cadj[e] & ~mask):
                ends[mask | (1 << b)] |= 1 << b
    if not ends[full]:
        return None
    # walk the DP backwards to recover one witness path
    path = []
    mask = full
    e = (ends[full] & -ends[full]).bit_length() - 1
    while True:
        path.append(verts[e])
        mask ^= 1 << e
        if not mask:
            break
        prev = ends[mask] & cadj[e]
        e = (prev & -prev).bit_length() - 1
    path.reverse()
    return tuple(path)


def _iter_paths_through(g: Graph, v: int, alive: int, budget: Budget
                        ) -> Iterator[tuple[tuple[int, ...], int]]:
    """All simple paths of the induced subgraph on ``alive`` that contain v.

    Each undirected path is produced exactly once: v splits the path into a
    left and a right arm, and a nonempty left arm is only allowed when its
    first vertex is smaller than the right arm's first vertex.
    """
    adj = g.adj
    vbit = 1 << v

    def arms(tip: int, used: int) -> Iterator[tuple[tuple[int, ...], int]]:
        for u in adj[tip]:
            ub = 1 << u
            if ub & alive and not ub & used:
                budget.spend()
                yield (u,), ub
                for seq, m in arms(u, used | ub):
                    yield (u,) + seq, ub | m

    yield (v,), vbit
    for right, rmask in arms(v, vbit):
        yield (v,) + right, vbit | rmask
        for left, lmask in arms(v, vbit | rmask):
            if left[0] < right[0]:
                yield tuple(reversed(left)) + (v,) + right, vbit | rmask | lmask


# ---------------------------------------------------------------------------
# disjoint path covers

def _path_cover_search(g: Graph, alive0: int, k: int | None, budget: Budget,
                       anchors: int | None = None) -> list[tuple[int, ...]] | None:
    """Cover ``alive0`` by disjoint paths: at most k of them (k=None: unbounded),
    each with an anchored endpoint when ``anchors`` is given.  Exhaustive."""
    adj = g.adj_mask
    failed: set[tuple[int, int | None]] = set()

    def rec(alive: int, r: int | None) -> list[tuple[int, ...]] | None:
        if alive == 0:
            return []
        if r is not None and r <= 0:
            return None
        key = (alive, r)
        if key in failed:
            return None
        budget.spend()
        comps = mask_components(adj, alive)
        if r is not None and len(comps) > r:
            failed.add(key)
            return None
        if anchors is not None and any(not c & anchors for c in comps):
            failed.add(key)
            return None
        if r == 1 and anchors is None:
            hp = ham_path_in_mask(g, alive, budget)
            if hp is not None:
                return [hp]
            failed.add(key)
            return None
        v = (alive & -alive).bit_length() - 1
        for path, pmask in _iter_paths_through(g, v, alive, budget):
            if anchors is not None:
                if not ((1 << path[0]) | (1 << path[-1])) & anchors:
                    continue
            rest = rec(alive & ~pmask, None if r is None else r - 1)
            if rest is not None:
                return [path] + rest
        failed.add(key)
        return None

    return rec(alive0, k)


def min_disjoint_path_cover(g: Graph, k: int, budget: Budget | int | None = None,
                            counting_prune: bool = True) -> Decision:
    """Can the vertices of g be partitioned into at most k vertex-disjoint paths?

    With ``counting_prune`` the bipartite bound is applied first: any path has
    at most one more vertex in one side than the other, so a bipartite graph
    needs at least ``abs(|A| - |B|)`` paths.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    budget = as_budget(budget)
    if g.n == 0:
        return Decision("yes", PathCover(()))
    if counting_prune:
        part = is_bipartite(g)
        if part is not None and k < abs(len(part.side_a) - len(part.side_b)):
            return Decision("no")
    try:
        paths = _path_cover_search(g, (1 << g.n) - 1, k, budget)
    except OutOfBudget:
        return Decision("unknown")
    if paths is None:
        return Decision("no")
    cover = PathCover(tuple(tuple(p) for p in paths))
    validate_path_cover(g, cover)
    return Decision("yes", cover)


def path_cover_number(g: Graph, budget: Budget | int | None = None) -> int | None:
    """Least k admitting a disjoint path cover, or None on budget exhaustion."""
    budget = as_budget(budget)
    lower = 1
    part = is_bipartite(g)
    if part is not None:
        lower = max(lower, abs(len(part.side_a) - len(part.side_b)))
    for k in range(lower, g.n + 1):
        dec = min_disjoint_path_cover(g, k, budget, counting_prune=False)
        if dec.status == "yes":
            return k
        if dec.status == "unknown":
            return None
    return None


def anchored_path_cover(g: Graph, alive: int, anchors: int,
                        budget: Budget) -> list[tuple[int, ...]] | None:
    """Disjoint paths covering ``alive``, each with an endpoint in ``anchors``.

    The path count is unconstrained.  Raises OutOfBudget; returns None when
    no such cover exists.
    """
    return _path_cover_search(g, alive, None, budget, anchors=anchors)


# ---------------------------------------------------------------------------
# cycle covers (entries may share vertices)

def _entries_through(g: Graph, v: int, budget: Budget) -> list[tuple[tuple[int, ...], int]]:
    """Cover entries containing v: simple cycles (canonical orientation),
    then degenerate edges and the bare vertex, largest coverage first."""
    adj = g.adj
    entries: list[tuple[tuple[int, ...], int]] = []
    stack = [v]

    def dfs(used: int) -> None:
        budget.spend()
        tip = stack[-1]
        for u in adj[tip]:
            ub = 1 << u
            if ub & used:
                continue
            stack.append(u)
            if len(stack) >= 3 and g.has_edge(u, v) and stack[1] < stack[-1]:
                entries.append((tuple(stack), used | ub))
            dfs(used | ub)
            stack.pop()

    dfs(1 << v)
    entries.sort(key=lambda e: -len(e[0]))
    for u in adj[v]:
        entries.append(((v, u), (1 << v) | (1 << u)))
    entries.append(((v,), 1 << v))
    return entries


def min_cycle_cover(g: Graph, k: int, budget: Budget | int | None = None) -> Decision:
    """Can at most k cycles (degenerate entries allowed, sharing allowed)
    touch every vertex of g?"""
    if k < 0:
        raise ValueError("k must be non-negative")
    budget = as_budget(budget)
    if g.n == 0:
        return Decision("yes", CycleCover(()))
    cache: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    failed: set[tuple[int, int]] = set()

    def entries(v: int) -> list[tuple[tuple[int, ...], int]]:
        if v not in cache:
            cache[v] = _entries_through(g, v, budget)
        return cache[v]

    def rec(uncovered: int, r: int) -> list[tuple[int, ...]] | None:
        if uncovered == 0:
            return []
        if r <= 0:
            return None
        key = (uncovered, r)
        if key in failed:
            return None
        budget.spend()
        v = (uncovered & -uncovered).bit_length() - 1
        for entry, emask in entries(v):
            rest = rec(uncovered & ~emask, r - 1)
            if rest is not None:
                return [entry] + rest
        failed.add(key)
        return None

    try:
        chosen = rec((1 << g.n) - 1, k)
    except OutOfBudget:
        return Decision("unknown")
    if chosen is None:
        return Decision("no")
    cover = CycleCover(tuple(chosen))
    validate_cycle_cover(g, cover)
    return Decision("yes", cover)


def cycle_cover_number(g: Graph, budget: Budget | int | None = None) -> int | None:
    """Least k admitting a cycle cover, or None on budget exhaustion.
    Never exceeds n: singleton entries always suffice."""
    budget = as_budget(budget)
    for k in range(1, g.n + 1):
        dec = min_cycle_cover(g, k, budget)
        if dec.status == "yes":
            return k
        if dec.status == "unknown":
            return None
    return None
