"""Spanning trees: classification, enumeration, branch-vertex minimization,
and the spanning-generalized-caterpillar decision.

A *branch vertex* of a tree has degree greater than two.  A tree is a
generalized caterpillar when some path (its *spine*) contains every branch
vertex; classification refines this into path / spider / caterpillar /
generalized caterpillar / other, reporting the finest class that matches.

``decide_sgc`` searches spine-first: a graph has a spanning generalized
caterpillar if and only if some simple path Q of the graph can be extended by
vertex-disjoint "leg" paths covering the remaining vertices, each leg hanging
off Q by one edge at a leg endpoint.  Exhausting all candidate spines is
therefore a sound "no" proof.  A full spanning-tree-enumeration fallback is
available behind the ``oracle`` flag.
"""
from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator

from .covers import anchored_path_cover, ham_path_in_mask
from .errors import CertificateError, GraphError
from .graphs import Edge, Graph, bits, is_connected, norm_edge
from .search import Budget, Decision, OutOfBudget, as_budget

TREE_KINDS = ("path", "spider", "caterpillar", "generalized_caterpillar", "other")


@dataclass(frozen=True)
class SpanningTree:
    host: Graph
    tree_edges: frozenset[Edge]

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.host.n)]
        for u, v in sorted(self.tree_edges):
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])


@dataclass(frozen=True)
class BranchProfile:
    branch_vertices: frozenset[int]
    degree3_vertices: frozenset[int]
    max_degree: int


@dataclass(frozen=True)
class CaterpillarCertificate:
    """A spanning tree together with a spine path holding all branch vertices."""

    tree: SpanningTree
    spine: tuple[int, ...]


def spanning_tree(host: Graph, edges: Iterator[tuple[int, int]] | frozenset[Edge]) -> SpanningTree:
    t = SpanningTree(host, frozenset(norm_edge(u, v) for u, v in edges))
    validate_spanning_tree(t)
    return t


def validate_spanning_tree(t: SpanningTree) -> None:
    g = t.host
    if not t.tree_edges <= g.edges:
        raise CertificateError("tree uses edges absent from the host graph")
    if len(t.tree_edges) != max(g.n - 1, 0):
        raise CertificateError(
            f"spanning tree of n={g.n} needs {max(g.n - 1, 0)} edges, got {len(t.tree_edges)}")
    if g.n == 0:
        return
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in t.adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != g.n:
        raise CertificateError("tree edge set does not span the graph")


def branch_profile(t: SpanningTree) -> BranchProfile:
    degs = [len(t.adj[v]) for v in range(t.host.n)]
    return BranchProfile(
        branch_vertices=frozenset(v for v, d in enumerate(degs) if d > 2),
        degree3_vertices=frozenset(v for v, d in enumerate(degs) if d == 3),
        max_degree=max(degs, default=0),
    )


def validate_caterpillar_certificate(cert: CaterpillarCertificate) -> None:
    validate_spanning_tree(cert.tree)
    spine = cert.spine
    if len(set(spine)) != len(spine):
        raise CertificateError("spine repeats a vertex")
    for a, b in zip(spine, spine[1:]):
        if norm_edge(a, b) not in cert.tree.tree_edges:
            raise CertificateError(f"spine step ({a},{b}) is not a tree edge")
    branch = branch_profile(cert.tree).branch_vertices
    if not branch <= set(spine):
        raise CertificateError(f"branch vertices {sorted(branch - set(spine))} are off the spine")


# ---------------------------------------------------------------------------
# classification

def _walk_path(adj_of: Callable[[int], list[int]], vertices: list[int]) -> list[int] | None:
    """Order ``vertices`` along a path using the given adjacency, else None."""
    if not vertices:
        return []
    members = set(vertices)
    nbrs = {v: [u for u in adj_of(v) if u in members] for v in vertices}
    if any(len(ns) > 2 for ns in nbrs.values()):
        return None
    tips = sorted(v for v in vertices if len(nbrs[v]) <= 1)
    start = tips[0] if tips else None
    if start is None:  # a cycle, not a path
        return None
    order = [start]
    prev = None
    while True:
        nxt = [u for u in nbrs[order[-1]] if u != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    return order if len(order) == len(vertices) else None


def _steiner_path(t: SpanningTree, terminals: list[int]) -> list[int] | None:
    """Order of the minimal subtree spanning ``terminals`` when it is a path."""
    keep = set(terminals)
    nbrs = {v: set(t.adj[v]) for v in range(t.host.n)}
    alive = set(range(t.host.n))
    queue = [v for v in alive if len(nbrs[v]) <= 1 and v not in keep]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in nbrs[v]:
            nbrs[u].discard(v)
            if u in alive and len(nbrs[u]) <= 1 and u not in keep:
                queue.append(u)
        nbrs[v] = set()
    return _walk_path(lambda v: sorted(nbrs[v]), sorted(alive))


def classify_tree(t: SpanningTree) -> tuple[str, CaterpillarCertificate | None]:
    """Finest matching class plus a spine certificate (None only for "other")."""
    n = t.host.n
    deg = [len(t.adj[v]) for v in range(n)]
    branch = [v for v in range(n) if deg[v] > 2]
    if not branch:
        order = _walk_path(lambda v: list(t.adj[v]), list(range(n)))
        return "path", CaterpillarCertificate(t, tuple(order or ()))
    if len(branch) == 1:
        return "spider", CaterpillarCertificate(t, (branch[0],))
    core = [v for v in range(n) if deg[v] >= 2]
    core_order = _walk_path(lambda v: list(t.adj[v]), core)
    if core_order is not None:
        return "caterpillar", CaterpillarCertificate(t, tuple(core_order))
    spine = _steiner_path(t, branch)
    if spine is not None:
        return "generalized_caterpillar", CaterpillarCertificate(t, tuple(spine))
    return "other", None


# ---------------------------------------------------------------------------
# hamiltonian paths and spanning-tree search

def hamiltonian_path(g: Graph, budget: Budget | int | None = None) -> Decision:
    """Bitmask-DP Hamiltonian path decision; witness is the vertex order."""
    budget = as_budget(budget)
    if g.n == 0:
        return Decision("yes", ())
    try:
        hp = ham_path_in_mask(g, (1 << g.n) - 1, budget)
    except OutOfBudget:
        return Decision("unknown")
    return Decision("yes", hp) if hp is not None else Decision("no")


def _path_as_tree(g: Graph, order: tuple[int, ...]) -> SpanningTree:
    return SpanningTree(g, frozenset(norm_edge(a, b) for a, b in zip(order, order[1:])))


def _dfs_tree(g: Graph) -> SpanningTree:
    edges = []
    seen = {0} if g.n else set()
    stack = [0] if g.n else []
    while stack:
        v = stack.pop()
        for u in reversed(g.adj[v]):
            if u not in seen:
                seen.add(u)
                edges.append(norm_edge(v, u))
                stack.append(u)
    return SpanningTree(g, frozenset(edges))


def _connectable(n: int, fixed: list[Edge], rest: list[Edge]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for a, b in fixed:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    for a, b in rest:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
            if comps == 1:
                return True
    return comps == 1


EnumerationResult = namedtuple("EnumerationResult", "count truncated")


def spanning_tree_enumerate(g: Graph,
                            visitor: Callable[[frozenset[Edge]], None] | None = None,
                            cap: int | None = None) -> EnumerationResult:
    """Visit every spanning tree exactly once (include/exclude over sorted edges
    with a connectivity feasibility check on the exclude branch)."""
    if not is_connected(g):
        raise GraphError("spanning tree enumeration needs a connected graph")
    n = g.n
    if n <= 1:
        if visitor is not None:
            visitor(frozenset())
        return EnumerationResult(1, False)
    edges = g.sorted_edges()
    m = len(edges)
    parent = list(range(n))
    size = [1] * n
    chosen: list[Edge] = []
    count = 0
    truncated = False

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int) -> None:
        nonlocal count, truncated
        if truncated:
            return
        if len(chosen) == n - 1:
            if cap is not None and count >= cap:
                # one more tree exists beyond the cap: now truncation is a fact
                truncated = True
                return
            count += 1
            if visitor is not None:
                visitor(frozenset(chosen))
            return
        if i == m or m - i < n - 1 - len(chosen):
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            chosen.append(edges[i])
            rec(i + 1)
            chosen.pop()
            size[ru] -= size[rv]
            parent[rv] = rv
            if truncated:
                return
        if _connectable(n, chosen, edges[i + 1:]):
            rec(i + 1)

    rec(0)
    return EnumerationResult(count, truncated)


def constrained_spanning_tree(g: Graph, branch_limit: int, budget: Budget,
                              degree_cap: int | None = None) -> Decision:
    """Is there a spanning tree with at most ``branch_limit`` branch vertices
    (and, when given, maximum degree at most ``degree_cap``)?  Witness is the
    tree's edge set."""
    n = g.n
    if n <= 2:
        return Decision("yes", frozenset(g.sorted_edges()[: max(n - 1, 0)]))
    edges = g.sorted_edges()
    m = len(edges)
    parent = list(range(n))
    size = [1] * n
    deg = [0] * n
    chosen: list[Edge] = []
    branches = 0

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int) -> frozenset[Edge] | None:
        nonlocal branches
        budget.spend()
        if len(chosen) == n - 1:
            return frozenset(chosen)
        if i == m or m - i < n - 1 - len(chosen):
            return None
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv and (degree_cap is None or (deg[u] < degree_cap and deg[v] < degree_cap)):
            newb = (deg[u] == 2) + (deg[v] == 2)
            if branches + newb <= branch_limit:
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                size[ru] += size[rv]
                deg[u] += 1
                deg[v] += 1
                branches += newb
                chosen.append(edges[i])
                got = rec(i + 1)
                chosen.pop()
                branches -= newb
                deg[u] -= 1
                deg[v] -= 1
                size[ru] -= size[rv]
                parent[rv] = rv
                if got is not None:
                    return got
        if _connectable(n, chosen, edges[i + 1:]):
            return rec(i + 1)
        return None

    try:
        got = rec(0)
    except OutOfBudget:
        return Decision("unknown")
    return Decision("yes", got) if got is not None else Decision("no")


@dataclass(frozen=True)
class MinBranchResult:
    """Least branch-vertex count over spanning trees; inexact results carry
    the best upper bound found before the budget ran out."""

    value: int
    tree: SpanningTree
    exact: bool


def min_branch_spanning_tree(g: Graph, budget: Budget | int | None = None) -> MinBranchResult:
    if not is_connected(g):
        raise GraphError("min-branch spanning tree needs a connected graph")
    budget = as_budget(budget)
    base = _dfs_tree(g)
    best = len(branch_profile(base).branch_vertices)
    for limit in range(best):
        if limit == 0:
            dec = hamiltonian_path(g, budget)
            if dec.status == "yes":
                return MinBranchResult(0, _path_as_tree(g, dec.witness), True)
        else:
            dec = constrained_spanning_tree(g, limit, budget)
            if dec.status == "yes":
                return MinBranchResult(limit, SpanningTree(g, dec.witness), True)
        if dec.status == "unknown":
            return MinBranchResult(best, base, False)
    return MinBranchResult(best, base, True)


# ---------------------------------------------------------------------------
# the spanning generalized caterpillar decision

def _spine_candidates(g: Graph, budget: Budget) -> Iterator[tuple[tuple[int, ...], int]]:
    """Every simple path of g exactly once (canonical: start <= end), as
    (vertex sequence, vertex mask)."""
    adj = g.adj

    def go(path: list[int], mask: int) -> Iterator[tuple[tuple[int, ...], int]]:
        budget.spend()
        for u in adj[path[-1]]:
            ub = 1 << u
            if not ub & mask:
                path.append(u)
                if path[0] <= u:
                    yield tuple(path), mask | ub
                yield from go(path, mask | ub)
                path.pop()

    for s in range(g.n):
        yield (s,), 1 << s
        yield from go([s], 1 << s)


def _tree_from_spine(g: Graph, spine: tuple[int, ...],
                     legs: list[tuple[int, ...]]) -> CaterpillarCertificate:
    qmask = 0
    for q in spine:
        qmask |= 1 << q
    edges = {norm_edge(a, b) for a, b in zip(spine, spine[1:])}
    for leg in legs:
        if not g.adj_mask[leg[0]] & qmask:
            leg = tuple(reversed(leg))
        attach = (g.adj_mask[leg[0]] & qmask)
        edges.add(norm_edge((attach & -attach).bit_length() - 1, leg[0]))
        edges.update(norm_edge(a, b) for a, b in zip(leg, leg[1:]))
    cert = CaterpillarCertificate(SpanningTree(g, frozenset(edges)), spine)
    validate_caterpillar_certificate(cert)
    return cert


def decide_sgc(g: Graph, budget: Budget | int | None = None,
               oracle: bool = False) -> Decision:
    """Does g admit a spanning tree whose branch vertices all lie on one path?

    Yes answers carry a validated CaterpillarCertificate; a "no" is an
    exhaustive proof; "unknown" means the budget ran out first.
    """
    if not is_connected(g):
        raise GraphError("SGC decision needs a connected graph")
    budget = as_budget(budget)
    n = g.n
    if n <= 2:
        order = tuple(range(n))
        return Decision("yes", CaterpillarCertificate(_path_as_tree(g, order), order))
    if oracle:
        return _decide_sgc_by_enumeration(g, budget)

    hp = hamiltonian_path(g, budget)
    if hp.status == "yes":
        order = hp.witness
        return Decision("yes", CaterpillarCertificate(_path_as_tree(g, order), order))

    full = (1 << n) - 1
    try:
        for spine, qmask in _spine_candidates(g, budget):
            alive = full & ~qmask
            if alive == 0:
                return Decision("yes", _tree_from_spine(g, spine, []))
            anchors = 0
            for q in spine:
                anchors |= g.adj_mask[q]
            anchors &= alive
            if not anchors:
                continue
            legs = anchored_path_cover(g, alive, anchors, budget)
            if legs is not None:
                return Decision("yes", _tree_from_spine(g, spine, legs))
    except OutOfBudget:
        return Decision("unknown")
    return Decision("no")


def _decide_sgc_by_enumeration(g: Graph, budget: Budget) -> Decision:
    found: list[CaterpillarCertificate] = []

    class _Stop(Exception):
        pass

    def visit(edge_set: frozenset[Edge]) -> None:
        budget.spend()
        _, cert = classify_tree(SpanningTree(g, edge_set))
        if cert is not None:
            found.append(cert)
            raise _Stop

    try:
        spanning_tree_enumerate(g, visit)
    except _Stop:
        validate_caterpillar_certificate(found[0])
        return Decision("yes", found[0])
    except OutOfBudget:
        return Decision("unknown")
    return Decision("no")
