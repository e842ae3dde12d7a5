import pytest
from hypothesis import given, strategies as st

from sgc.errors import FormatError, GraphError
from sgc.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    emit_edgelist,
    emit_graph6,
    is_bipartite,
    is_connected,
    new_graph,
    parse_edgelist,
    parse_graph6,
    path_graph,
    random_connected,
    standard_graphs,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


def test_new_graph_normalizes_and_validates():
    g = new_graph(3, [(2, 0), (0, 2), (1, 2)])
    assert g.edges == frozenset({(0, 2), (1, 2)})
    assert g.adj == ((2,), (2,), (0, 1))
    with pytest.raises(GraphError):
        new_graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        new_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        new_graph(-1, [])


def test_adjacency_masks_match_tuples():
    g = complete_bipartite(2, 3)
    for v in range(g.n):
        assert sorted(u for u in range(g.n) if g.adj_mask[v] >> u & 1) == list(g.adj[v])
        assert g.degree(v) == len(g.adj[v])


def test_standard_families():
    assert path_graph(1).m == 0
    assert path_graph(4).edges == frozenset({(0, 1), (1, 2), (2, 3)})
    assert cycle_graph(3).m == 3
    assert complete_graph(5).m == 10
    assert standard_graphs("cycle", 4) == cycle_graph(4)
    with pytest.raises(GraphError):
        standard_graphs("petersen", 10)
    with pytest.raises(GraphError):
        cycle_graph(2)


def test_complete_bipartite_layout():
    g = complete_bipartite(2, 4)
    assert g.n == 6 and g.m == 8
    assert g.bipartition.side_a == frozenset({0, 1})
    part = is_bipartite(g)
    assert part is not None
    assert {part.side_a, part.side_b} == {frozenset({0, 1}), frozenset({2, 3, 4, 5})}
    assert is_bipartite(complete_graph(3)) is None


def test_connectivity_predicate():
    assert is_connected(path_graph(6))
    assert not is_connected(Graph(3, frozenset({(0, 1)})))
    assert is_connected(Graph(1, frozenset()))
    assert is_connected(Graph(0, frozenset()))


def test_random_connected_deterministic():
    a = random_connected(9, 0.3, seed=42)
    b = random_connected(9, 0.3, seed=42)
    assert a == b
    assert is_connected(a)
    assert random_connected(9, 0.3, seed=43) != a  # overwhelmingly likely
    with pytest.raises(GraphError):
        random_connected(5, 1.5, seed=0)


# --- graph6 ----------------------------------------------------------------

def test_graph6_known_bytes():
    """Hand-encoded examples: K_2 is 'A_' and K_3 is 'Bw'."""
    assert emit_graph6(complete_graph(2)) == "A_"
    assert emit_graph6(complete_graph(3)) == "Bw"
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6("A?") == Graph(2, frozenset())
    assert parse_graph6("?") == Graph(0, frozenset())


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_rejects_malformed():
    with pytest.raises(FormatError):
        parse_graph6("")
    with pytest.raises(FormatError):
        parse_graph6("\x1c??")  # byte below the alphabet
    with pytest.raises(FormatError):
        parse_graph6("~???")  # long-form header
    with pytest.raises(FormatError):
        parse_graph6("Bw?")  # trailing byte
    with pytest.raises(FormatError):
        parse_graph6("B")  # missing body
    # n=2 uses one body byte holding 1 data bit; a nonzero pad must fail
    with pytest.raises(FormatError):
        parse_graph6("A" + chr(63 + 0b000001))


def test_graph6_size_limit():
    with pytest.raises(FormatError):
        emit_graph6(Graph(63, frozenset()))


# --- edge lists --------------------------------------------------------------

def test_edgelist_round_trip():
    g = complete_bipartite(3, 4)
    assert parse_edgelist(emit_edgelist(g)) == g


def test_edgelist_rejects_malformed():
    with pytest.raises(FormatError):
        parse_edgelist("")
    with pytest.raises(FormatError):
        parse_edgelist("3\n0 1\n")
    with pytest.raises(FormatError):
        parse_edgelist("3 2\n0 1\n")  # promised two edges
    with pytest.raises(FormatError):
        parse_edgelist("3 1\n0 x\n")
    with pytest.raises(FormatError):
        parse_edgelist("3 1\n0 3\n")  # endpoint out of range
