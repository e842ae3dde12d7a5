import itertools

import pytest

from sgc.graphs import Graph, is_connected


def connected_graphs(n: int):
    """Every connected labelled graph on exactly n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        g = Graph(n, frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1))
        if is_connected(g):
            out.append(g)
    return out


@pytest.fixture(scope="session")
def corpus_n4():
    return [g for n in (1, 2, 3, 4) for g in connected_graphs(n)]


@pytest.fixture(scope="session")
def corpus_n5():
    return connected_graphs(5)
