import pytest

from curvekit.curves import MappingWord, apply_word, block_curve, separation
from curvekit.errors import UnsupportedError
from curvekit.supports import (
    HingeType,
    Support,
    SupportType,
    WitnessMismatchError,
    census,
    classify_support,
    completable_types,
    completions_by_trees,
    completions_maximal,
    completions_of,
    config_tree,
    enumerate_complete_support_types,
    filling_pair_in,
    hinge_compatible,
    member_types,
    mu,
    nu,
    nu_by_compositions,
    terminal_fingerprint,
)


def T(p, *q):
    return SupportType(p, q)


def test_nu_and_mu():
    assert [nu(b) for b in range(7, 13)] == [2, 3, 3, 4, 4, 5]
    assert [mu(q) for q in (2, 3, 4, 5, 6)] == [0, 1, 1, 2, 2]


def test_support_type():
    t = T(2, 2, 3)
    assert t.q == (3, 2)
    assert str(t) == '2|3,2'
    assert t.b == 7 and t.d == 2 and t.complexity == 1
    assert t.completable and not t.terminal
    assert T(3, 4).terminal
    assert not T(1, 4, 2).completable
    with pytest.raises(UnsupportedError):
        T(1, 1)


@pytest.mark.parametrize('b', [7, 8, 9, 10])
def test_nu_by_enumeration(b):
    n, families = enumerate_complete_support_types(b)
    assert n == nu(b)
    assert nu_by_compositions(b) == n
    assert all(len(f) == n for f in families)


def test_enumeration_needs_seven_punctures():
    with pytest.raises(UnsupportedError):
        enumerate_complete_support_types(6)


def test_member_types():
    assert member_types(7) == {T(3, 4), T(4, 3), T(2, 3, 2)}
    assert member_types(8) == {T(3, 5), T(2, 3, 3)}
    for b in (7, 8, 9, 10):
        assert member_types(b) == completable_types(b)


@pytest.mark.parametrize(
    't, minimal, unambiguous',
    [
        (T(3, 4), True, True),
        (T(4, 3), False, False),
        (T(2, 3, 2), False, False),
        (T(3, 5), True, True),
        (T(2, 3, 3), True, True),
    ],
)
def test_classify_support(t, minimal, unambiguous):
    flags = classify_support(t)
    assert flags.minimal == minimal
    assert flags.unambiguous == unambiguous


@pytest.mark.parametrize('b', [7, 8, 9, 10])
def test_minimal_by_inclusion(b):
    for t in completable_types(b):
        flags = classify_support(t)
        assert flags.minimal == completions_maximal(t)
        if b % 2 == 0:
            assert flags.minimal and flags.unambiguous
        else:
            assert flags.minimal == (flags.unambiguous and t.complexity == 1)


def test_cut_off_pants_adds_completions():
    # cutting a puncture and the 3-disk off the S_5 leaves the terminal S_4
    assert len(completions_of(T(4, 3))) == 1
    assert len(completions_of(T(3, 4))) == 3
    assert not completions_maximal(T(4, 3))
    assert completions_maximal(T(3, 4))
    assert not completions_maximal(T(5, 2))


def test_completions():
    assert completions_of(T(4, 3)) == completions_of(T(2, 3, 2))
    assert completions_of(T(3, 4))
    assert completions_of(T(5, 2)) == frozenset()
    for b in (7, 8):
        for t in member_types(b):
            assert completions_of(t) == completions_by_trees(t)


def test_census():
    rows = census(7)
    assert [r['type'] for r in rows] == ['2|3,2', '3|4', '4|3']
    assert all(r['nu'] == 2 and r['completions'] > 0 for r in rows)
    assert rows[1]['minimal'] and rows[1]['terminal']


def test_config_tree():
    tree = config_tree(7, [])
    assert len(tree.nodes) == 1 and tree.is_tree() and tree.euler_ok()
    tree = config_tree(7, [block_curve(7, (1, 2)), block_curve(7, (4, 5))])
    assert len(tree.nodes) == 3
    assert tree.is_tree()
    assert tree.euler_ok()
    assert len(tree.to_json()['edges']) == 2


def test_labelled_support():
    U = Support.block(7, (1, 2, 3))
    assert U.type == T(3, 4)
    assert U.boundary_curves() == [block_curve(7, (4, 5, 6, 7))]
    assert U.rotate(1) == Support.block(7, (2, 3, 4))
    V = Support.realize(T(2, 3, 2))
    assert V.punctures == {1, 2}
    assert V.outer == ({3, 4, 5}, {6, 7})
    assert V.to_json() == {'b': 7, 'punctures': [1, 2], 'outer': [[3, 4, 5], [6, 7]]}
    with pytest.raises(UnsupportedError):
        Support(7, {1, 2}, ({3, 4, 5, 6, 7},))
    with pytest.raises(UnsupportedError):
        Support(7, {1, 2, 3}, ({4, 5, 6},))


def test_hinges():
    U = Support.block(7, (1, 2, 3))
    assert hinge_compatible(HingeType(U), HingeType(Support.block(7, (4, 5, 6))))
    assert hinge_compatible(HingeType(Support.block(7, (4, 5, 6))), HingeType(U))
    assert not hinge_compatible(HingeType(U), HingeType(U))
    assert not hinge_compatible(HingeType(U), HingeType(Support.block(7, (2, 3, 4))))
    assert U.disjoint_slots(Support.block(7, (2, 3, 4))) is None


def test_terminal_fingerprint():
    U = Support.block(7, (1, 2, 3))
    assert terminal_fingerprint(U, [block_curve(7, (1, 2, 3)), block_curve(7, (4, 5, 6))]) == {frozenset({4, 5, 6})}
    # a witness transported off the blocks
    twisted = apply_word(MappingWord.H(6), block_curve(7, (4, 5, 6)))
    assert min(separation(twisted).blocks, key=len) == {4, 5, 7}
    assert terminal_fingerprint(U, [block_curve(7, (1, 2, 3)), twisted]) == {frozenset({4, 5, 7})}
    with pytest.raises(WitnessMismatchError):
        terminal_fingerprint(U, [block_curve(7, (2, 3, 4))])


def test_terminal_fingerprints_tell_supports_apart():
    witness = [block_curve(8, (1, 2, 3)), block_curve(8, (4, 5, 6))]
    A, B = Support.block(8, (1, 2, 3)), Support.block(8, (4, 5, 6))
    assert terminal_fingerprint(A, witness) == {B.punctures}
    assert terminal_fingerprint(B, witness) == {A.punctures}


def test_no_filling_pair_in_a_three_disk():
    assert filling_pair_in(7, (1, 2, 3), window=8) is None
