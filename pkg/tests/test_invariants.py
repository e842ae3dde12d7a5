import pytest
from hypothesis import given, settings, strategies as st

from sgc.errors import CertificateError
from sgc.graphs import Graph, complete_bipartite, complete_graph, cycle_graph, path_graph
from sgc.invariants import (
    check_independent_set,
    check_separator,
    independence_number,
    vertex_connectivity,
)
from sgc.oracles import independence_number_brute, vertex_connectivity_brute
from sgc.search import Budget


def test_alpha_known_values():
    assert independence_number(complete_graph(7)).alpha == 1
    assert independence_number(cycle_graph(7)).alpha == 3
    assert independence_number(path_graph(7)).alpha == 4
    assert independence_number(Graph(5, frozenset())).alpha == 5
    cert = independence_number(complete_bipartite(6, 12))
    assert cert.alpha == 12 and cert.exhaustive
    # the only maximum independent set of K_{6,12} is the big side
    assert cert.witness == frozenset(range(6, 18))


def test_alpha_witness_always_validates(corpus_n5):
    for g in corpus_n5[::7]:
        cert = independence_number(g)
        assert cert.exhaustive
        check_independent_set(g, cert.witness)
        assert len(cert.witness) == cert.alpha


def test_alpha_matches_brute(corpus_n4, corpus_n5):
    for g in corpus_n4 + corpus_n5[::5]:
        assert independence_number(g).alpha == independence_number_brute(g)


def test_alpha_budget_exhaustion_keeps_lower_bound():
    g = complete_bipartite(6, 12)
    cert = independence_number(g, Budget(max_nodes=0))
    assert not cert.exhaustive
    assert cert.alpha >= 1
    check_independent_set(g, cert.witness)


def test_check_independent_set_rejects_edges():
    g = path_graph(3)
    with pytest.raises(CertificateError):
        check_independent_set(g, frozenset({0, 1}))
    with pytest.raises(CertificateError):
        check_independent_set(g, frozenset({5}))


def test_kappa_known_values():
    assert vertex_connectivity(complete_graph(6)).kappa == 5
    assert vertex_connectivity(complete_graph(1)).kappa == 0
    assert vertex_connectivity(path_graph(5)).kappa == 1
    assert vertex_connectivity(cycle_graph(8)).kappa == 2
    assert vertex_connectivity(complete_bipartite(6, 12)).kappa == 6
    assert vertex_connectivity(Graph(4, frozenset({(0, 1), (2, 3)}))).kappa == 0


def test_kappa_certificates(corpus_n5):
    for g in corpus_n5[::7]:
        cert = vertex_connectivity(g)
        if cert.complete:
            assert cert.separator is None
            assert cert.kappa == g.n - 1
        else:
            assert len(cert.separator) == cert.kappa
            if g.n - len(cert.separator) >= 2:
                check_separator(g, cert.separator)


def test_kappa_matches_brute(corpus_n4, corpus_n5):
    for g in corpus_n4 + corpus_n5[::5]:
        assert vertex_connectivity(g).kappa == vertex_connectivity_brute(g)


def test_check_separator_rejects_non_cuts():
    g = complete_graph(4)
    with pytest.raises(CertificateError):
        check_separator(g, frozenset({0}))


@st.composite
def graph_and_non_edge(draw):
    n = draw(st.integers(min_value=3, max_value=7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True,
                           max_size=len(pairs) - 1))
    g = Graph(n, frozenset(chosen))
    missing = [e for e in pairs if e not in g.edges]
    extra = draw(st.sampled_from(missing))
    return g, Graph(n, g.edges | {extra})


@settings(max_examples=60, deadline=None)
@given(graph_and_non_edge())
def test_adding_an_edge_moves_invariants_one_way(pair):
    g, g_plus = pair
    assert independence_number(g_plus).alpha <= independence_number(g).alpha
    assert vertex_connectivity(g_plus).kappa >= vertex_connectivity(g).kappa
