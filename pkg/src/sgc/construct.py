"""Constructive pipeline: fans, cycles through prescribed vertices, and the
merge-and-prune step that turns a low-branch spanning tree plus a covering
cycle into a caterpillar-style certificate.

The two entry points, ``construct_sgc_theorem1`` and ``construct_sgc_theorem3``,
check their hypotheses explicitly and report *why* they decline instead of
guessing: ``hypothesis_unmet`` means the input provably falls outside the
guarantee, ``budget`` means an exact subproblem timed out first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import flow
from .errors import CertificateError, GraphError
from .graphs import Edge, Graph, is_connected, norm_edge
from .invariants import independence_number, vertex_connectivity
from .search import Budget, Decision, OutOfBudget, as_budget
from .trees import (
    CaterpillarCertificate,
    SpanningTree,
    branch_profile,
    classify_tree,
    constrained_spanning_tree,
    min_branch_spanning_tree,
    validate_caterpillar_certificate,
    validate_spanning_tree,
)


@dataclass(frozen=True)
class Fan:
    """Paths from one origin to distinct targets, pairwise sharing only the
    origin and touching the target set only at their final vertex."""

    origin: int
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CycleWitness:
    cycle: tuple[int, ...]

    def edges(self) -> frozenset[Edge]:
        c = self.cycle
        return frozenset(norm_edge(a, b) for a, b in zip(c, c[1:] + c[:1]))


def validate_fan(g: Graph, fan: Fan, targets: frozenset[int]) -> None:
    seen: set[int] = set()
    ends: set[int] = set()
    for path in fan.paths:
        if len(path) < 2:
            raise CertificateError("fan path has fewer than two vertices")
        if path[0] != fan.origin:
            raise CertificateError("fan path does not start at the origin")
        if path[-1] not in targets:
            raise CertificateError("fan path does not end on a target")
        if len(set(path)) != len(path):
            raise CertificateError("fan path repeats a vertex")
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                raise CertificateError(f"fan path uses the non-edge {a}-{b}")
        for v in path[1:-1]:
            if v in targets:
                raise CertificateError("fan path passes through a target")
        if path[-1] in ends:
            raise CertificateError("two fan paths end on the same target")
        ends.add(path[-1])
        body = set(path[1:])
        if body & seen:
            raise CertificateError("fan paths share a non-origin vertex")
        seen |= body


def validate_cycle_witness(g: Graph, witness: CycleWitness,
                           required: frozenset[int] = frozenset()) -> None:
    c = witness.cycle
    if len(c) < 3:
        raise CertificateError("cycle needs at least three vertices")
    if len(set(c)) != len(c):
        raise CertificateError("cycle repeats a vertex")
    for a, b in zip(c, c[1:] + c[:1]):
        if not g.has_edge(a, b):
            raise CertificateError(f"cycle uses the non-edge {a}-{b}")
    if not required <= set(c):
        missing = sorted(required - set(c))
        raise CertificateError(f"cycle misses required vertices {missing}")


def vertex_disjoint_fan(g: Graph, origin: int, targets: frozenset[int],
                        k: int) -> Fan | None:
    """A fan of ``k`` internally disjoint origin-to-target paths, or None if
    the graph does not carry that many."""
    targets = frozenset(targets)
    if origin in targets:
        raise ValueError("origin may not be one of the targets")
    if not targets or k < 1:
        raise ValueError("need at least one target and k >= 1")
    if k > len(targets):
        raise ValueError("k exceeds the number of targets")
    paths = flow.max_fan(g, origin, targets, limit=k)
    if len(paths) < k:
        return None
    fan = Fan(origin, tuple(tuple(p) for p in paths))
    validate_fan(g, fan, targets)
    return fan


def _initial_cycle(g: Graph, u: int, v: int) -> list[int] | None:
    """A cycle through u and v from two internally disjoint u-v paths."""
    paths = flow.disjoint_paths(g, u, v, limit=2)
    if len(paths) < 2:
        return None
    first, second = paths
    return first + second[-2:0:-1]


def _absorb_all(g: Graph, cycle: list[int], wset: list[int],
                budget: Budget) -> list[int] | None:
    """Grow ``cycle`` until it covers ``wset`` by splicing in fans.

    One uncovered target is absorbed per round.  With f fan paths there are f
    arcs between consecutive attachment points, and f exceeds the number of
    covered targets whenever the connectivity precondition holds, so some arc
    has no target in its interior and can be replaced by the detour.
    """
    targets_all = set(wset)
    while True:
        budget.spend()
        on_cycle = set(cycle)
        missing = [x for x in wset if x not in on_cycle]
        if not missing:
            return cycle
        x = missing[0]
        fan_paths = flow.max_fan(g, x, frozenset(on_cycle))
        if len(fan_paths) < 2:
            return None
        pos = {c: i for i, c in enumerate(cycle)}
        length = len(cycle)
        ends = sorted(pos[p[-1]] for p in fan_paths)
        by_end = {p[-1]: p for p in fan_paths}
        wpos = {pos[c] for c in on_cycle & targets_all}
        chosen = None
        for idx, a in enumerate(ends):
            b = ends[(idx + 1) % len(ends)]
            i = (a + 1) % length
            clear = True
            while i != b:
                if i in wpos:
                    clear = False
                    break
                i = (i + 1) % length
            if clear:
                chosen = (a, b)
                break
        if chosen is None:
            return None
        a, b = chosen
        into = by_end[cycle[a]]
        out = by_end[cycle[b]]
        seg = []
        i = b
        while True:
            seg.append(cycle[i])
            if i == a:
                break
            i = (i + 1) % length
        cycle = seg + list(into[-2:0:-1]) + [x] + list(out[1:-1])


def _exhaustive_cycle(g: Graph, wset: list[int], budget: Budget) -> list[int] | None:
    """Search every cycle through wset[0] (direction-canonical) for one that
    covers all of ``wset``.  Exact, so only sensible on small graphs."""
    start = wset[0]
    want = set(wset)
    adj = g.adj
    found: list[int] | None = None

    def rec(path: list[int], mask: int) -> bool:
        budget.spend()
        tip = path[-1]
        for u in adj[tip]:
            bit = 1 << u
            if bit & mask:
                continue
            path.append(u)
            if (len(path) >= 3 and g.has_edge(u, start)
                    and path[1] < path[-1] and want <= set(path)):
                nonlocal found
                found = list(path)
                path.pop()
                return True
            if rec(path, mask | bit):
                path.pop()
                return True
            path.pop()
        return False

    rec([start], 1 << start)
    return found


EXHAUSTIVE_CYCLE_LIMIT = 12


def cycle_through(g: Graph, w: list[int] | frozenset[int],
                  budget: Budget | int | None = None) -> CycleWitness:
    """A cycle covering every vertex of ``w``.

    The constructive route (two disjoint paths, then fan absorption) succeeds
    whenever ``2 <= |w| <= kappa(g)``.  If it trips on an input outside that
    guarantee, graphs with at most EXHAUSTIVE_CYCLE_LIMIT vertices fall back to
    full search; past that, CertificateError.
    """
    wset = sorted(set(w))
    if len(wset) < 2:
        raise ValueError("need at least two required vertices")
    for x in wset:
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range")
    budget = as_budget(budget)
    cycle = _initial_cycle(g, wset[0], wset[1])
    if cycle is not None:
        cycle = _absorb_all(g, cycle, wset, budget)
    if cycle is None and g.n <= EXHAUSTIVE_CYCLE_LIMIT:
        cycle = _exhaustive_cycle(g, wset, budget)
    if cycle is None:
        raise CertificateError(
            "no covering cycle found; the input graph does not satisfy the "
            "connectivity precondition for the requested vertex set")
    witness = CycleWitness(tuple(cycle))
    validate_cycle_witness(g, witness, frozenset(wset))
    return witness


def _find_cycle_edges(n: int, edges: set[Edge]) -> frozenset[Edge] | None:
    """Edge set of some cycle in (V, edges), or None if the graph is a forest.

    Deterministic: roots and neighbours are scanned in ascending order, so the
    same input always yields the same cycle.
    """
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(edges):
        nbrs[u].append(v)
        nbrs[v].append(u)
    visited = [False] * n
    parent = [-1] * n
    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        stack = [(root, iter(nbrs[root]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent[v]:
                    continue
                if visited[u]:
                    cyc = [norm_edge(v, u)]
                    x = v
                    while x != u:
                        cyc.append(norm_edge(x, parent[x]))
                        x = parent[x]
                    return frozenset(cyc)
                visited[u] = True
                parent[u] = v
                stack.append((u, iter(nbrs[u])))
                advanced = True
                break
            if not advanced:
                stack.pop()
    return None


def _rotate_behind(cycle: list[int], gap: Edge) -> list[int]:
    """Relist the cycle so that ``gap`` is the wrap-around (absent) edge."""
    length = len(cycle)
    for i in range(length):
        j = (i + 1) % length
        if norm_edge(cycle[i], cycle[j]) == gap:
            return cycle[j:] + cycle[: j]
    raise CertificateError("gap edge does not lie on the cycle")


def merge_and_prune(g: Graph, t: SpanningTree, c: CycleWitness) -> CaterpillarCertificate:
    """Overlay the cycle on the tree, open the cycle at its smallest edge, and
    break every remaining cycle by deleting its smallest deletable edge.

    Needs every branch vertex of ``t`` on ``c``; the opened cycle then becomes
    the spine of the resulting spanning tree and off-cycle vertices never gain
    edges, so their degree stays at most 2.
    """
    validate_spanning_tree(t)
    validate_cycle_witness(g, c)
    if t.host is not g and t.host != g:
        raise GraphError("tree and cycle must live in the same host graph")
    branch = branch_profile(t).branch_vertices
    if not branch <= set(c.cycle):
        missing = sorted(branch - set(c.cycle))
        raise CertificateError(f"cycle misses branch vertices {missing}")
    cycle_edges = c.edges()
    gap = min(cycle_edges)
    spine_edges = cycle_edges - {gap}
    edges = (set(t.tree_edges) | cycle_edges) - {gap}
    while True:
        cyc = _find_cycle_edges(g.n, edges)
        if cyc is None:
            break
        deletable = cyc - spine_edges
        if not deletable:
            raise CertificateError("found a cycle made entirely of spine edges")
        edges.discard(min(deletable))
    tree = SpanningTree(g, frozenset(edges))
    cert = CaterpillarCertificate(tree, tuple(_rotate_behind(list(c.cycle), gap)))
    validate_caterpillar_certificate(cert)
    return cert


ConstructStatus = Literal["ok", "hypothesis_unmet", "budget", "failed"]


@dataclass(frozen=True)
class ConstructResult:
    status: ConstructStatus
    certificate: CaterpillarCertificate | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.status == "ok"


def _certify_tree(g: Graph, t: SpanningTree, budget: Budget) -> ConstructResult:
    """Wrap up a low-branch spanning tree as a certificate, routing through
    cycle_through + merge_and_prune when it has two or more branch vertices."""
    branch = sorted(branch_profile(t).branch_vertices)
    if len(branch) <= 1:
        kind, cert = classify_tree(t)
        if cert is None:  # unreachable for <= 1 branch vertex
            raise CertificateError(f"spanning tree unexpectedly classified as {kind}")
        return ConstructResult("ok", certificate=cert)
    try:
        cyc = cycle_through(g, branch, budget)
    except OutOfBudget:
        return ConstructResult("budget", reason="cycle search ran out of budget")
    except CertificateError as exc:
        return ConstructResult("failed", reason=str(exc))
    return ConstructResult("ok", certificate=merge_and_prune(g, t, cyc))


def construct_sgc_theorem1(g: Graph, budget: Budget | int | None = None) -> ConstructResult:
    """Build a caterpillar-style spanning tree for graphs whose minimum
    branch-vertex count does not exceed their connectivity.

    Pipeline: exact minimum-branch spanning tree, then a cycle through its
    branch vertices (at most kappa of them, so one exists), then
    merge-and-prune.
    """
    if not is_connected(g):
        raise GraphError("construction needs a connected graph")
    budget = as_budget(budget)
    kappa = vertex_connectivity(g).kappa
    mb = min_branch_spanning_tree(g, budget)
    if mb.value > kappa:
        # An upper bound at most kappa would have sufficed, so only this case
        # needs the search to have been exhaustive.
        if not mb.exact:
            return ConstructResult(
                "budget", reason="minimum branch count not settled within budget")
        return ConstructResult(
            "hypothesis_unmet",
            reason=f"minimum branch-vertex count {mb.value} exceeds connectivity {kappa}")
    return _certify_tree(g, mb.tree, budget)


def spanning_3tree_bounded(g: Graph, n_param: int,
                           budget: Budget | int | None = None) -> Decision:
    """Spanning tree with maximum degree <= 3 and at most ``n_param`` vertices
    of degree 3; witness is the SpanningTree."""
    if not is_connected(g):
        raise GraphError("spanning tree search needs a connected graph")
    if n_param < 0:
        raise ValueError("n_param must be non-negative")
    budget = as_budget(budget)
    dec = constrained_spanning_tree(g, n_param, budget, degree_cap=3)
    if dec.status != "yes":
        return dec
    return Decision("yes", SpanningTree(g, dec.witness))


def construct_sgc_theorem3(g: Graph, budget: Budget | int | None = None) -> ConstructResult:
    """Build a caterpillar-style spanning tree of maximum degree <= 5 for
    graphs with independence number at most 2*connectivity + 1.

    Pipeline: spanning tree of maximum degree <= 3 with at most kappa vertices
    of degree 3, then the same cycle + merge-and-prune finish as theorem 1.
    """
    if not is_connected(g):
        raise GraphError("construction needs a connected graph")
    budget = as_budget(budget)
    kappa = vertex_connectivity(g).kappa
    alpha = independence_number(g, budget)
    if not alpha.exhaustive:
        return ConstructResult(
            "budget", reason="independence number not settled within budget")
    if alpha.alpha > 2 * kappa + 1:
        return ConstructResult(
            "hypothesis_unmet",
            reason=f"independence number {alpha.alpha} exceeds 2*kappa + 1 = {2 * kappa + 1}")
    dec = spanning_3tree_bounded(g, kappa, budget)
    if dec.status == "unknown":
        return ConstructResult(
            "budget", reason="degree-bounded tree search ran out of budget")
    if dec.status == "no":
        return ConstructResult(
            "failed",
            reason="no spanning tree of maximum degree 3 with at most kappa "
                   "degree-3 vertices exists, contradicting the guarantee")
    result = _certify_tree(g, dec.witness, budget)
    if result.status == "ok":
        top = branch_profile(result.certificate.tree).max_degree
        if top > 5:
            raise CertificateError(
                f"construction produced maximum degree {top}, above the promised 5")
    return result
