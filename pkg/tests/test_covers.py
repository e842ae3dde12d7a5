import pytest
from hypothesis import given, settings, strategies as st

from sgc.covers import (
    CycleCover,
    PathCover,
    anchored_path_cover,
    cycle_cover_number,
    min_cycle_cover,
    min_disjoint_path_cover,
    path_cover_number,
    validate_cycle_cover,
    validate_path_cover,
)
from sgc.errors import CertificateError
from sgc.graphs import Graph, complete_bipartite, complete_graph, cycle_graph, path_graph
from sgc.oracles import cycle_cover_number_brute, path_cover_number_brute
from sgc.search import Budget


def test_path_cover_easy_cases():
    assert path_cover_number(path_graph(7)) == 1
    assert path_cover_number(complete_graph(5)) == 1
    assert path_cover_number(Graph(4, frozenset())) == 4


def test_path_cover_bipartite_gap():
    """K_{a,b} needs b - a paths once b > a + 1: each path alternates sides."""
    dec = min_disjoint_path_cover(complete_bipartite(2, 4), 2)
    assert dec.status == "yes"
    validate_path_cover(complete_bipartite(2, 4), dec.witness)

    # the counting route and the exhaustive route must agree
    for prune in (True, False):
        dec = min_disjoint_path_cover(complete_bipartite(3, 6), 2, counting_prune=prune)
        assert dec.status == "no", f"counting_prune={prune}"
    assert path_cover_number(complete_bipartite(3, 6)) == 3


def test_path_cover_k52():
    assert min_disjoint_path_cover(complete_bipartite(5, 2), 2).status == "no"
    dec = min_disjoint_path_cover(complete_bipartite(5, 2), 3)
    assert dec.status == "yes"
    validate_path_cover(complete_bipartite(5, 2), dec.witness)


def test_path_cover_matches_brute(corpus_n4, corpus_n5):
    for g in corpus_n4 + corpus_n5[::11]:
        assert path_cover_number(g) == path_cover_number_brute(g), g


def test_path_cover_budget_unknown():
    dec = min_disjoint_path_cover(complete_bipartite(3, 6), 3, Budget(max_nodes=0))
    assert dec.status == "unknown"
    assert path_cover_number(complete_bipartite(3, 6), Budget(max_nodes=0)) is None


def test_validate_path_cover_rejects_bad_covers():
    g = path_graph(4)
    with pytest.raises(CertificateError):
        validate_path_cover(g, PathCover(((0, 1),)))  # not spanning
    with pytest.raises(CertificateError):
        validate_path_cover(g, PathCover(((0, 1, 2, 3), (3,))))  # overlap
    with pytest.raises(CertificateError):
        validate_path_cover(g, PathCover(((0, 2, 1, 3),)))  # non-edges


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=5))
def test_path_cover_witness_paths_balance_sides(a, b):
    """Every returned path on K_{a,b} touches the sides in alternation."""
    g = complete_bipartite(a, b)
    k = max(1, abs(b - a))
    dec = min_disjoint_path_cover(g, k)
    assert dec.status == "yes"
    validate_path_cover(g, dec.witness)
    for path in dec.witness.paths:
        in_a = sum(1 for v in path if v < a)
        assert abs(len(path) - 2 * in_a) <= 1


def test_anchored_cover_respects_anchors():
    g = path_graph(5)
    cover = anchored_path_cover(g, alive=0b01110, anchors=0b00010, budget=Budget())
    assert cover is not None
    # only one path may contain the sole anchor, so it must swallow all three
    assert len(cover) == 1
    path = tuple(cover[0])
    assert sorted(path) == [1, 2, 3]
    assert 1 in (path[0], path[-1])

    # vertex 1 cannot anchor a second path, so {1,3} split over two paths fails
    assert anchored_path_cover(g, alive=0b01010, anchors=0b00010, budget=Budget()) is None


def test_cycle_cover_easy_cases():
    assert cycle_cover_number(cycle_graph(5)) == 1
    assert cycle_cover_number(path_graph(4)) == 2  # two edge-cycles
    assert cycle_cover_number(complete_bipartite(2, 4)) == 2
    assert cycle_cover_number(Graph(1, frozenset())) == 1


def test_cycle_cover_witnesses_validate():
    g = complete_bipartite(2, 4)
    dec = min_cycle_cover(g, 2)
    assert dec.status == "yes"
    validate_cycle_cover(g, dec.witness)
    assert min_cycle_cover(g, 1).status == "no"


def test_cycle_cover_matches_brute(corpus_n4, corpus_n5):
    for g in corpus_n4 + corpus_n5[::11]:
        assert cycle_cover_number(g) == cycle_cover_number_brute(g), g


def test_validate_cycle_cover_rules():
    g = cycle_graph(4)
    validate_cycle_cover(g, CycleCover(((0, 1, 2, 3),)))
    validate_cycle_cover(g, CycleCover(((0, 1), (2, 3))))  # edges as degenerate cycles
    # sharing vertices between entries is explicitly allowed
    validate_cycle_cover(g, CycleCover(((0, 1, 2, 3), (1, 2))))
    with pytest.raises(CertificateError):
        validate_cycle_cover(g, CycleCover(((0, 2),)))  # not an edge
    with pytest.raises(CertificateError):
        validate_cycle_cover(g, CycleCover(((0, 1, 2),)))  # 0-2 closes a non-edge
    with pytest.raises(CertificateError):
        validate_cycle_cover(g, CycleCover(((0, 1), (2,))))  # vertex 3 uncovered
