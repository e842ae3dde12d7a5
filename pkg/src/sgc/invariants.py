"""Exact graph invariants with certificates: independence number, connectivity.

The independence number is computed by branch and bound with a greedy
clique-cover upper bound, which closes quickly on the dense-ish instances this
package cares about (a few dozen vertices).  Vertex connectivity runs Menger
computations on a vertex-split flow network over a dominating set of
non-adjacent pairs.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import flow
from .errors import CertificateError
from .graphs import Graph, bits, is_connected
from .search import Budget, OutOfBudget, as_budget


@dataclass(frozen=True)
class IndependenceCertificate:
    alpha: int
    witness: frozenset[int]
    exhaustive: bool


@dataclass(frozen=True)
class ConnectivityCertificate:
    kappa: int
    separator: frozenset[int] | None
    complete: bool


def check_independent_set(g: Graph, vertices: frozenset[int]) -> None:
    """Raise CertificateError unless ``vertices`` is independent in g."""
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise CertificateError(f"vertex {v} out of range")
        mask |= 1 << v
    for v in vertices:
        if g.adj_mask[v] & mask:
            raise CertificateError(f"witness contains the edge at vertex {v}")


def check_separator(g: Graph, separator: frozenset[int]) -> None:
    """Raise CertificateError unless removing ``separator`` disconnects g."""
    alive = [v for v in range(g.n) if v not in separator]
    if len(alive) < 2:
        raise CertificateError("separator leaves fewer than two vertices")
    alive_mask = 0
    for v in alive:
        alive_mask |= 1 << v
    seen = 1 << alive[0]
    frontier = seen
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj_mask[v]
        frontier = grow & alive_mask & ~seen
        seen |= frontier
    if seen == alive_mask:
        raise CertificateError("graph stays connected after removing the separator")


def _greedy_independent(g: Graph) -> int:
    """Quick initial solution: repeatedly take a minimum-degree surviving vertex."""
    alive = (1 << g.n) - 1
    chosen = 0
    adj = g.adj_mask
    while alive:
        best_v = -1
        best_deg = g.n + 1
        for v in bits(alive):
            d = (adj[v] & alive).bit_count()
            if d < best_deg:
                best_deg = d
                best_v = v
        chosen |= 1 << best_v
        alive &= ~(adj[best_v] | (1 << best_v))
    return chosen


def _clique_cover_bound(adj: tuple[int, ...], mask: int) -> int:
    """Greedy clique cover of the induced subgraph; its size bounds alpha above."""
    cliques: list[int] = []
    for v in bits(mask):
        av = adj[v]
        for i, cm in enumerate(cliques):
            if cm & ~av == 0:
                cliques[i] = cm | (1 << v)
                break
        else:
            cliques.append(1 << v)
    return len(cliques)


def independence_number(g: Graph, budget: Budget | int | None = None) -> IndependenceCertificate:
    budget = as_budget(budget)
    adj = g.adj_mask
    best_mask = _greedy_independent(g)
    best = best_mask.bit_count()
    exhaustive = True

    def expand(cand: int, size: int, current: int) -> None:
        nonlocal best, best_mask
        budget.spend()
        if cand == 0:
            if size > best:
                best, best_mask = size, current
            return
        if size + _clique_cover_bound(adj, cand) <= best:
            return
        # branch on a vertex of maximum residual degree
        pick = -1
        pick_deg = -1
        for v in bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > pick_deg:
                pick_deg = d
                pick = v
        bit = 1 << pick
        expand(cand & ~(adj[pick] | bit), size + 1, current | bit)
        expand(cand ^ bit, size, current)

    try:
        expand((1 << g.n) - 1, 0, 0)
    except OutOfBudget:
        exhaustive = False
    witness = frozenset(bits(best_mask))
    check_independent_set(g, witness)
    return IndependenceCertificate(best, witness, exhaustive)


def vertex_connectivity(g: Graph) -> ConnectivityCertificate:
    n = g.n
    if n <= 1:
        return ConnectivityCertificate(0, None, True)
    if g.m == n * (n - 1) // 2:
        return ConnectivityCertificate(n - 1, None, True)
    if not is_connected(g):
        return ConnectivityCertificate(0, frozenset(), False)
    v = min(range(n), key=lambda u: (g.degree(u), u))
    best = g.degree(v)
    best_sep = frozenset(g.adj[v])
    for w in range(n):
        if w != v and not g.has_edge(v, w):
            value, sep = flow.min_vertex_separator(g, v, w)
            if value < best:
                best, best_sep = value, sep
    nbrs = g.adj[v]
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if not g.has_edge(a, b):
                value, sep = flow.min_vertex_separator(g, a, b)
                if value < best:
                    best, best_sep = value, sep
    check_separator(g, best_sep)
    if len(best_sep) != best:
        raise CertificateError("separator size disagrees with the flow value")
    return ConnectivityCertificate(best, best_sep, False)
