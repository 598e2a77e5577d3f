import networkx as nx
import pytest

from curvekit.curves import MappingWord, apply_all, apply_word, block_curve
from curvekit.errors import UnsupportedError
from curvekit.rigid import (
    NotCrossingError,
    build_rigid_set,
    build_Y,
    complete_star,
    copy_agreement_check,
    default_window,
    embedding_violations,
    extension_uniqueness_check,
    minimal_vertices,
    special_pentagon_certificate,
    twist_letter,
)


@pytest.mark.parametrize('b', range(5, 11))
def test_vertex_count(b):
    assert build_rigid_set(b).graph.number_of_nodes() == b * (b - 3) // 2


def test_x5_is_a_pentagon():
    X = build_rigid_set(5)
    assert nx.is_isomorphic(X.graph, nx.cycle_graph(5))
    with pytest.raises(UnsupportedError):
        build_rigid_set(4)


def test_embedding():
    X = build_rigid_set(7)
    assert X.curve((1, 3)) == block_curve(7, (2, 3))
    assert X.vertex_of(block_curve(7, (1, 2))) == (2, 7)
    assert X.vertex_of(block_curve(7, (1, 2, 3))) == (3, 7)
    assert X.vertex_of(block_curve(7, (7, 1))) == (1, 6)
    assert X.disjoint((2, 7), (3, 7))
    assert X.crossing((1, 3), (2, 4))
    assert not X.crossing((1, 3), (1, 3))
    data = X.to_json()
    assert len(data['vertices']) == 14
    assert len(data['edges']) == X.graph.number_of_edges()


@pytest.mark.parametrize('b', [5, 6])
def test_embedding_matches_intersections(b):
    assert not embedding_violations(build_rigid_set(b))


@pytest.mark.slow
def test_embedding_matches_intersections_b7():
    assert not embedding_violations(build_rigid_set(7), threads=2)


def test_link():
    X = build_rigid_set(5)
    assert len(X.link([(1, 3)])) == 2
    assert X.link([(1, 3), (2, 4)]) == {(1, 4)}


def test_minimal_vertices():
    X = build_rigid_set(6)
    assert set(minimal_vertices(X)) == {(1, 3), (2, 4), (3, 5), (4, 6), (1, 5), (2, 6)}
    assert len(minimal_vertices(build_rigid_set(5))) == 5


@pytest.mark.parametrize('b', [6, 7, 8])
def test_minimal_links_are_smaller_rigid_sets(b):
    X = build_rigid_set(b)
    smaller = build_rigid_set(b - 1).graph
    minimal = minimal_vertices(X)
    assert len(minimal) == b
    for v in minimal:
        assert nx.is_isomorphic(X.graph.subgraph(X.link([v])), smaller)


def test_twist_letter():
    X = build_rigid_set(7)
    assert twist_letter(X, (2, 7)) == 1
    assert twist_letter(X, (1, 3)) == 2
    assert twist_letter(X, (1, 6)) == 7
    with pytest.raises(UnsupportedError):
        twist_letter(X, (3, 7))


def test_build_Y():
    X = build_rigid_set(5)
    Y = build_Y(X)
    assert Y[:5] == X.curves()
    assert len(Y) > 5
    assert len(set(Y)) == len(Y)


def test_pentagon_certificate_x5():
    X = build_rigid_set(5)
    cert = special_pentagon_certificate(X, (1, 3), (2, 4))
    assert cert is not None
    assert cert.R == ()
    assert set(cert.pentagon) == set(X.vertices)
    assert cert.pentagon[0] == (1, 3) and cert.pentagon[2] == (2, 4)
    assert len(cert.to_json(X)['pentagon']) == 5
    with pytest.raises(NotCrossingError):
        special_pentagon_certificate(X, (1, 3), (1, 4))


def test_pentagon_certificates_x7():
    X = build_rigid_set(7)
    for alpha, beta in [((1, 3), (2, 4)), ((2, 7), (1, 3)), ((1, 4), (2, 6))]:
        cert = special_pentagon_certificate(X, alpha, beta)
        assert cert is not None
        assert len(cert.R) == 2


def test_default_window():
    assert default_window(build_rigid_set(7)) == 14


@pytest.mark.slow
def test_extension_is_unique():
    X = build_rigid_set(7)
    verdict = extension_uniqueness_check(X, (2, 7), block_curve(7, (7, 1)), block_curve(7, (2, 3)))
    assert verdict.status == 'unique'
    assert verdict.ok
    assert verdict.candidates == (block_curve(7, (2, 3)),)
    assert len(verdict.facet) == 3


def test_complete_star():
    X = build_rigid_set(7)
    beta = (1, 3)
    h = MappingWord.H(twist_letter(X, beta))
    x = next(X.curve(v) for v in X.vertices if X.crossing(v, beta))
    w = MappingWord.H(5) * MappingWord.H(6, -1)
    alpha = apply_word(w * h**2, x)
    copy = complete_star(X, beta, alpha, w)
    assert copy is not None
    assert copy.power == 2
    assert alpha in copy.curves
    star = [X.curve(v) for v in X.link([beta]) | {beta}]
    assert set(apply_all(w, star)) <= set(copy.curves)
    assert len(set(copy.curves)) == len(X.vertices)
    # odd powers swap the punctures of beta, so no block curve lands on alpha
    assert complete_star(X, beta, apply_word(w * h, x), w, span=0) is None
    with pytest.raises(NotCrossingError):
        complete_star(X, beta, apply_word(w, X.curve(beta)), w)
    with pytest.raises(UnsupportedError):
        complete_star(X, (1, 4), alpha, w)


def test_copies_agree():
    pairs, violations = copy_agreement_check()
    assert pairs > 0
    assert not violations
