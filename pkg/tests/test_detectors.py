import pytest

from curvekit.curves import MappingWord, TransporterMismatchError, apply_all, apply_word, block_curve
from curvekit.detectors import (
    AnnulusPunctureError,
    BizarreConditionError,
    FacetError,
    NotOneSeparatingError,
    NotOneSeparatingStartError,
    SeparationOrderError,
    bizarre_simplex,
    detect_special_intersection,
    disjoint_surrounding_witness,
    filled_division,
    halftwist_characterization_check,
    heptagon_certificate,
    is_chain,
    is_square,
    is_surrounding_pair,
    is_surrounding_triple,
    octagon_certificate,
    standard_heptagon,
    strongly_separating_boundary,
    surrounding_pair_via_O,
    surrounding_triple_by_adjacency,
    three_side,
    triple_chain,
)
from curvekit.engine import intersection_number
from curvekit.errors import UnsupportedError
from curvekit.rigid import build_rigid_set
from curvekit.suites import division_square

H = MappingWord.H


def block(*punctures, b=7):
    return block_curve(b, punctures)


def chain(b, last):
    return [block_curve(b, range(1, k + 1)) for k in range(3, last + 1)]


def test_three_side():
    assert three_side(block(1, 2, 3)) == {1, 2, 3}
    assert three_side(block(1, 2)) is None
    assert three_side(block(1, 2, 3, b=6)) is None


def test_is_chain():
    assert is_chain([block(1, 2), block(2, 3), block(3, 4)])
    assert not is_chain([block(1, 2), block(2, 3), block(1, 2)])
    assert not is_chain([block(1, 2), block(4, 5)])
    assert not is_chain([block(1, 2)])


def test_surrounding_pair():
    cert = is_surrounding_pair(block(1, 2, 3), block(2, 3, 4))
    assert cert is not None
    assert cert.kind == 'pair'
    assert cert.omega == block(2, 3)
    assert is_surrounding_pair(block(1, 2, 3), block(3, 4, 5)) is None
    assert is_surrounding_pair(block(1, 2, 3), block(4, 5, 6)) is None
    assert is_surrounding_pair(block(1, 2, 3, b=6), block(2, 3, 4, b=6)) is None


def test_surrounding_triple():
    alpha = block(1, 2, 3)
    gamma = apply_word(H(3), alpha)
    cert = is_surrounding_triple(alpha, block(7, 1, 2), gamma)
    assert cert is not None
    assert cert.omega == block(1, 2)
    assert len(cert.to_json()['curves']) == 3
    assert is_surrounding_triple(alpha, block(7, 1, 2), block(2, 3, 4)) is None


def test_surrounding_triple_by_adjacency():
    alpha = block(1, 2, 3)
    gamma = apply_word(H(3), alpha)
    assert surrounding_triple_by_adjacency(alpha, block(7, 1, 2), gamma)
    # pairwise surrounding inside the disk around 1..4, so block{5,6,7} misses all three
    assert is_surrounding_pair(gamma, block(2, 3, 4)) is not None
    assert is_surrounding_triple(alpha, block(2, 3, 4), gamma) is None
    assert not surrounding_triple_by_adjacency(alpha, block(2, 3, 4), gamma)
    assert not surrounding_triple_by_adjacency(alpha, block(7, 1, 2), block(2, 3, 4))
    with pytest.raises(UnsupportedError):
        surrounding_triple_by_adjacency(*chain(8, 5))


def test_triple_chain_trivial():
    pair = (block(1, 2, 3), block(2, 3, 4))
    result = triple_chain(pair, pair, [H(1)], depth=1)
    assert result.status == 'found'
    assert result.depth == 0


def test_disjoint_surrounding_witness():
    pool = [block(8, 1, 2, b=8), block(1, 2, 3, b=8), block(4, 5, 6, b=8), block(5, 6, 7, b=8)]
    found = disjoint_surrounding_witness(block(1, 2, b=8), block(5, 6, b=8), pool)
    assert found is not None
    assert {found[0], found[1]} == {block(8, 1, 2, b=8), block(1, 2, 3, b=8)}
    assert {found[2], found[3]} == {block(4, 5, 6, b=8), block(5, 6, 7, b=8)}


def test_standard_heptagon():
    cycle = standard_heptagon()
    assert cycle[0] == block(1, 2, 3)
    assert cycle[1] == block(4, 5, 6)
    assert cycle[2] == block(7, 1, 2)
    assert len(set(cycle)) == 7


def test_heptagon_certificate():
    cert = heptagon_certificate((block(1, 2, 3), block(2, 3, 4)))
    assert not cert.violations()
    assert cert.to_json()['word'] == []


@pytest.mark.slow
def test_transported_heptagon():
    w = H(2) * H(5, -1)
    pair = (apply_word(w, block(1, 2, 3)), apply_word(w, block(2, 3, 4)))
    assert not heptagon_certificate(pair, w).violations()


def test_heptagon_errors():
    with pytest.raises(TransporterMismatchError):
        heptagon_certificate((block(1, 2, 3), block(3, 4, 5)))
    with pytest.raises(UnsupportedError):
        heptagon_certificate((block(1, 2, 3, b=8), block(2, 3, 4, b=8)))
    w = H(4)
    pair = (apply_word(w, block(1, 2, 3)), apply_word(w, block(2, 3, 4)))
    with pytest.raises(TransporterMismatchError):
        heptagon_certificate(pair)


def test_octagon():
    O = octagon_certificate()
    assert O.graph.number_of_nodes() == 8
    assert O.graph.number_of_edges() == 12
    assert all(d == 3 for _, d in O.graph.degree)
    assert surrounding_pair_via_O(1, 2, O)
    assert not surrounding_pair_via_O(1, 3, O)
    assert not surrounding_pair_via_O(1, 4, O)
    assert not surrounding_pair_via_O(1, 1, O)
    assert is_surrounding_pair(O.embedding[1], O.embedding[2]) is not None
    assert is_surrounding_pair(O.embedding[1], O.embedding[3]) is None
    with pytest.raises(UnsupportedError):
        octagon_certificate(7)


@pytest.mark.slow
def test_octagon_matches_surrounding_pairs():
    O = octagon_certificate()
    for u in range(1, 9):
        for v in range(u + 1, 9):
            surrounding = is_surrounding_pair(O.embedding[u], O.embedding[v]) is not None
            assert surrounding_pair_via_O(u, v, O) == surrounding


@pytest.mark.slow
@pytest.mark.parametrize('w', [H(1), H(2) * H(5, -1), H(3) * H(7) * H(4, -1)])
def test_transported_octagon(w):
    O = octagon_certificate()
    moved = {v: apply_word(w, c) for v, c in O.embedding.items()}
    for u in range(1, 9):
        for v in range(u + 1, 9):
            assert (intersection_number(moved[u], moved[v]) == 0) == O.graph.has_edge(u, v)
            surrounding = is_surrounding_pair(moved[u], moved[v]) is not None
            assert surrounding == surrounding_pair_via_O(u, v, O)


def test_halftwist_fixes_disjoint_curves():
    X = build_rigid_set(7)
    verdict = halftwist_characterization_check(X, (3, 5), (2, 7))
    assert verdict.status == 'fixed'
    assert verdict.ok


@pytest.mark.slow
def test_halftwist_characterization():
    X = build_rigid_set(7)
    verdict = halftwist_characterization_check(X, (1, 3), (2, 7))
    assert verdict.status == 'two-twists'
    assert set(verdict.found) == {apply_word(H(1), block(2, 3)), apply_word(H(1, -1), block(2, 3))}
    # every triangulation of the pentagon on 3..7 gives a facet
    assert verdict.facets > 1


def test_special_intersection_errors():
    P = [block_curve(7, range(4, k + 1)) for k in range(5, 8)]
    with pytest.raises(FacetError):
        detect_special_intersection(block(1, 2), block(2, 3), P[:2])
    with pytest.raises(FacetError):
        detect_special_intersection(block(1, 2), block(4, 5), P)
    assert detect_special_intersection(block(1, 2), block(1, 2), P) is None


def division_curves(minus=(5, 6, 7)):
    return (block(1, 2, 3, b=9), block(*minus, b=9), block(2, 3, 4, b=9), block(7, 8, 9, b=9))


def test_square():
    assert is_square(*division_curves())
    ap, am, bp, bm = division_curves()
    assert not is_square(ap, bp, am, bm)


def test_strongly_separating_boundary():
    assert strongly_separating_boundary(block(1, 2, 3, b=9), block(2, 3, 4, b=9)) == block(1, 2, 3, 4, b=9)


def test_punctured_division():
    assert filled_division(*division_curves((6, 7, 8))) is None


def test_division_errors():
    with pytest.raises(NotOneSeparatingError):
        filled_division(block(1, 2, b=9), block(5, 6, 7, b=9), block(2, 3, 4, b=9), block(7, 8, 9, b=9))
    with pytest.raises(UnsupportedError):
        filled_division(block(1, 2, 3, b=6), block(4, 5, 6, b=6), block(2, 3, 4, b=6), block(5, 6, 1, b=6))


def test_filled_division():
    found = filled_division(*division_curves(), window=8, witnesses=2)
    assert found is not None
    assert found.delta == block(1, 2, 3, 4, b=9)
    assert found.complete(2)
    assert 'delta' in found.to_json()


@pytest.mark.parametrize('b', [8, 9])
def test_division_with_second_square(b):
    *square, delta = division_square(b)
    found = filled_division(*square, witnesses=0)
    assert found is not None
    assert found.delta == delta
    # twists on either side of delta fix it and move the square
    inside = H(1) * H(3, -1) * H(6)
    moved = apply_all(inside, square)
    assert moved != square
    again = filled_division(*moved, witnesses=0)
    assert again is not None
    assert again.delta == delta


@pytest.mark.parametrize('b', [9, 10, 11])
def test_bizarre_chains(b):
    peripheral = bizarre_simplex(chain(b, b - 6))
    assert peripheral.punctures == set(range(b - 5, b + 1))
    assert peripheral.boundary_count == 1


def test_bizarre_errors():
    with pytest.raises(NotOneSeparatingStartError):
        bizarre_simplex([block(1, 2, b=9)])
    with pytest.raises(AnnulusPunctureError):
        bizarre_simplex([block_curve(10, (1, 2, 3)), block_curve(10, (1, 2, 3, 4, 5))])
    with pytest.raises(SeparationOrderError):
        bizarre_simplex([block_curve(11, range(1, k + 1)) for k in (3, 5, 4)])
    with pytest.raises(BizarreConditionError):
        bizarre_simplex(chain(10, 3))
    with pytest.raises(BizarreConditionError):
        bizarre_simplex([])
    with pytest.raises(UnsupportedError):
        bizarre_simplex([block(1, 2, 3, b=8)])
