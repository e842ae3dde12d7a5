"""Brute-force reference implementations.

Everything here trades speed for obviousness: exhaustive masks, permutations,
and set partitions with no pruning beyond feasibility.  The test suite pins
the clever solvers against these on small graphs, so keep them dumb.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import comb

from .graphs import Edge, Graph, bits, norm_edge


def independence_number_brute(g: Graph) -> int:
    adj = g.adj_mask
    best = 0
    for mask in range(1 << g.n):
        if mask.bit_count() <= best:
            continue
        if all(adj[v] & mask == 0 for v in bits(mask)):
            best = mask.bit_count()
    return best


def _connected_mask(g: Graph, alive: int) -> bool:
    if alive == 0:
        return True
    start = (alive & -alive).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj_mask[v]
        grow &= alive & ~seen
        seen |= grow
        frontier = grow
    return seen == alive


def vertex_connectivity_brute(g: Graph) -> int:
    n = g.n
    if n <= 1:
        return 0
    full = (1 << n) - 1
    if not _connected_mask(g, full):
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    for k in range(1, n - 1):
        for cut in combinations(range(n), k):
            alive = full
            for v in cut:
                alive &= ~(1 << v)
            if not _connected_mask(g, alive):
                return k
    return n - 1


def has_hamiltonian_path_brute(g: Graph) -> bool:
    n = g.n
    if n <= 1:
        return True
    adj = g.adj

    def extend(tip: int, used: int) -> bool:
        if used.bit_count() == n:
            return True
        return any(extend(u, used | (1 << u))
                   for u in adj[tip] if not used & (1 << u))

    return any(extend(s, 1 << s) for s in range(n))


def _has_hamiltonian_path_on(g: Graph, block: tuple[int, ...]) -> bool:
    if len(block) <= 1:
        return True
    for perm in permutations(block):
        if perm[0] > perm[-1]:
            continue
        if all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
            return True
    return False


def _has_hamiltonian_cycle_on(g: Graph, block: tuple[int, ...]) -> bool:
    if len(block) < 3:
        return False
    first, rest = block[0], block[1:]
    for perm in permutations(rest):
        if perm[0] > perm[-1]:
            continue
        order = (first,) + perm
        if (g.has_edge(order[-1], first)
                and all(g.has_edge(a, b) for a, b in zip(order, order[1:]))):
            return True
    return False


def _set_partitions(items: tuple[int, ...]):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[head]] + part
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]


def path_cover_number_brute(g: Graph) -> int:
    """Fewest vertex-disjoint paths covering V, by trying every set partition."""
    best = g.n
    for part in _set_partitions(tuple(range(g.n))):
        if len(part) >= best:
            continue
        if all(_has_hamiltonian_path_on(g, tuple(block)) for block in part):
            best = len(part)
    return best


def cycle_cover_number_brute(g: Graph) -> int:
    """Fewest cycles (single vertices and edges allowed) whose union is V.

    Cycles may overlap, so this is plain set cover over every vertex set that
    carries a cycle, solved by breadth-first search over covered masks.
    """
    n = g.n
    full = (1 << n) - 1
    candidates: list[int] = [1 << v for v in range(n)]
    candidates += [(1 << u) | (1 << v) for u, v in g.edges]
    for size in range(3, n + 1):
        for block in combinations(range(n), size):
            if _has_hamiltonian_cycle_on(g, block):
                mask = 0
                for v in block:
                    mask |= 1 << v
                candidates.append(mask)
    covered = {0}
    frontier = [0]
    steps = 0
    while True:
        steps += 1
        grown: list[int] = []
        for state in frontier:
            for c in candidates:
                nxt = state | c
                if nxt == full:
                    return steps
                if nxt not in covered:
                    covered.add(nxt)
                    grown.append(nxt)
        frontier = grown
        if not frontier:
            raise AssertionError("set cover ran dry before covering V")


def _is_spanning_tree(n: int, chosen: tuple[Edge, ...]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    joined = 0
    for u, v in chosen:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
        joined += 1
    return joined == n - 1


def spanning_trees_brute(g: Graph):
    """Every spanning tree edge set, by filtering (n-1)-subsets of the edges."""
    if g.n <= 1:
        yield frozenset()
        return
    for chosen in combinations(g.sorted_edges(), g.n - 1):
        if _is_spanning_tree(g.n, chosen):
            yield frozenset(chosen)


def _tree_adjacency(n: int, edges: frozenset[Edge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _tree_path(adj: list[list[int]], s: int, t: int) -> set[int]:
    """Vertices on the unique s-t path of a tree (BFS parents)."""
    parent = {s: s}
    queue = [s]
    while queue:
        v = queue.pop()
        for u in adj[v]:
            if u not in parent:
                parent[u] = v
                queue.append(u)
    path = {t}
    while t != s:
        t = parent[t]
        path.add(t)
    return path


def tree_branches_on_one_path(n: int, edges: frozenset[Edge]) -> bool:
    """Do all branch vertices (degree > 2) of this tree lie on one path?

    Checked the obvious way: some pair of branch vertices must span all the
    others along its unique connecting path.
    """
    adj = _tree_adjacency(n, edges)
    branch = [v for v in range(n) if len(adj[v]) > 2]
    if len(branch) <= 1:
        return True
    want = set(branch)
    return any(want <= _tree_path(adj, u, v)
               for u, v in combinations(branch, 2))


def classify_tree_brute(n: int, edges: frozenset[Edge]) -> str:
    adj = _tree_adjacency(n, edges)
    degs = [len(a) for a in adj]
    branch = [v for v in range(n) if degs[v] > 2]
    if not branch:
        return "path"
    if len(branch) == 1:
        return "spider"
    core = [v for v in range(n) if degs[v] >= 2]
    core_degs = {v: sum(1 for u in adj[v] if degs[u] >= 2) for v in core}
    if all(d <= 2 for d in core_degs.values()):
        return "caterpillar"
    if tree_branches_on_one_path(n, edges):
        return "generalized_caterpillar"
    return "other"


def min_branch_brute(g: Graph) -> int:
    best = g.n
    for edges in spanning_trees_brute(g):
        deg = [0] * g.n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        best = min(best, sum(1 for d in deg if d > 2))
        if best == 0:
            break
    return best


def sgc_brute(g: Graph) -> bool:
    """Does some spanning tree keep all its branch vertices on one path?"""
    return any(tree_branches_on_one_path(g.n, edges)
               for edges in spanning_trees_brute(g))


def max_fan_brute(g: Graph, origin: int, targets: frozenset[int]) -> int:
    """Largest fan size, via the Menger dual: the smallest set of non-origin
    vertices whose removal leaves no target reachable from the origin."""

    def separated(cut: frozenset[int]) -> bool:
        seen = {origin}
        queue = [origin]
        while queue:
            v = queue.pop()
            for u in g.adj[v]:
                if u in cut or u in seen:
                    continue
                if u in targets:
                    return False
                seen.add(u)
                queue.append(u)
        return True

    others = [v for v in range(g.n) if v != origin]
    for k in range(len(others) + 1):
        if any(separated(frozenset(cut)) for cut in combinations(others, k)):
            return k
    raise AssertionError("removing every other vertex always separates")


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem with exact rational elimination."""
    n = g.n
    if n <= 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    size = n - 1  # any cofactor works; drop the last row and column
    mat = [row[:size] for row in lap[:size]]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if mat[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, size):
            factor = mat[r][col] * inv
            if factor:
                for c in range(col, size):
                    mat[r][c] -= factor * mat[col][c]
    assert det.denominator == 1
    return abs(int(det))


def connected_graph_count(n: int) -> int:
    """Labelled connected graphs on n vertices, by the standard recurrence."""
    total = [2 ** (k * (k - 1) // 2) for k in range(n + 1)]
    conn = [0] * (n + 1)
    conn[0] = 1
    for k in range(1, n + 1):
        acc = total[k]
        for j in range(1, k):
            acc -= comb(k - 1, j - 1) * conn[j] * total[k - j]
        conn[k] = acc
    return conn[n]
