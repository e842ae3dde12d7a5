"""Parametric graph families used by the verification harness.

``counterexample_bipartite(m)`` is the complete bipartite graph K_{m,2m}: its
independence number is exactly twice its connectivity, yet for m >= 3 no two
disjoint paths cover it (any path cover of K_{a,b} needs at least b - a paths).

``theorem2_family(m)`` glues m + 2 copies of K_{2m+1,m} to a shared independent
hub of m vertices.  Every copy reaches the rest of the graph only through the
hub, so the connectivity stays m while the big sides of the copies form an
independent set of size (2m+1)(m+2); the result has no spanning tree whose
branch vertices fit on a single path.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, complete_bipartite, new_graph


def counterexample_bipartite(m: int) -> Graph:
    """K_{m,2m}; side A is 0..m-1, side B is m..3m-1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return complete_bipartite(m, 2 * m)


@dataclass(frozen=True)
class CopyBlock:
    """One glued copy of K_{2m+1,m} inside a theorem2 instance."""

    big_side: tuple[int, ...]      # the 2m+1 independent vertices
    small_side: tuple[int, ...]    # the m vertices joined to all of big_side
    connectors: tuple[int, ...]    # first m of big_side, each joined to every hub vertex


@dataclass(frozen=True)
class Theorem2Instance:
    m: int
    graph: Graph
    hub: tuple[int, ...]
    copies: tuple[CopyBlock, ...]


def theorem2_family(m: int) -> Theorem2Instance:
    """The hub-and-copies instance for parameter m, canonically labelled.

    Hub vertices come first (0..m-1); copy i then occupies the next 3m+1
    labels, big side before small side.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    hub = tuple(range(m))
    block = 3 * m + 1
    copies = []
    edges: list[tuple[int, int]] = []
    for i in range(m + 2):
        offset = m + i * block
        big = tuple(range(offset, offset + 2 * m + 1))
        small = tuple(range(offset + 2 * m + 1, offset + block))
        connectors = big[:m]
        for b in big:
            for s in small:
                edges.append((b, s))
        for c in connectors:
            for h in hub:
                edges.append((c, h))
        copies.append(CopyBlock(big, small, connectors))
    n = m + (m + 2) * block
    return Theorem2Instance(m, new_graph(n, edges), hub, tuple(copies))


def validate_theorem2_instance(inst: Theorem2Instance) -> None:
    """Structural audit: exact vertex count, block wiring, and nothing extra."""
    m = inst.m
    g = inst.graph
    block = 3 * m + 1
    if g.n != m + (m + 2) * block:
        raise ValueError(f"expected {m + (m + 2) * block} vertices, got {g.n}")
    if inst.hub != tuple(range(m)):
        raise ValueError("hub is not the first m vertices")
    if len(inst.copies) != m + 2:
        raise ValueError(f"expected {m + 2} copies, got {len(inst.copies)}")
    want: set[tuple[int, int]] = set()
    for i, copy in enumerate(inst.copies):
        offset = m + i * block
        if copy.big_side != tuple(range(offset, offset + 2 * m + 1)):
            raise ValueError(f"copy {i} has a mislabelled big side")
        if copy.small_side != tuple(range(offset + 2 * m + 1, offset + block)):
            raise ValueError(f"copy {i} has a mislabelled small side")
        if copy.connectors != copy.big_side[:m]:
            raise ValueError(f"copy {i} connectors are not the first m big-side vertices")
        for b in copy.big_side:
            for s in copy.small_side:
                want.add((b, s) if b < s else (s, b))
        for c in copy.connectors:
            for h in inst.hub:
                want.add((h, c))
    if g.edges != frozenset(want):
        raise ValueError("edge set does not match the declared structure")


def expected_theorem2_invariants(m: int) -> dict[str, int]:
    """Closed forms for the instance: n, independence number, connectivity."""
    return {
        "n": m + (m + 2) * (3 * m + 1),
        "alpha": (2 * m + 1) * (m + 2),
        "kappa": m,
    }
