import json
import random

import pytest

from curvekit.curves import (
    apply_all,
    apply_word,
    block_curve,
    curves_equal,
    dehn_twist_word,
    enumerate_curves,
    random_curve,
    random_word,
    separation,
)
from curvekit.engine import (
    LOWER,
    UPPER,
    NotAMulticurveError,
    NotFillingError,
    SingleCurveExpectedError,
    add_curve,
    arrangement,
    complement_components,
    dump_json,
    extract_key,
    filled_subsurface,
    intersection_number,
    loosen,
    minimality_certificate,
    realize,
    realize_family,
    resolve,
    tauten,
    to_svg,
)
from curvekit.errors import MalformedKeyError


def block(*punctures, b=7):
    return block_curve(b, punctures)


@pytest.mark.parametrize(
    'a, c, n',
    [
        ((1, 2, 3), (2, 3, 4), 2),
        ((1, 2), (4, 5), 0),
        ((1, 2), (1, 2, 3), 0),
        ((1, 2), (2, 3), 2),
        ((1, 2, 3), (5, 6, 7), 0),
    ],
)
def test_intersection_of_blocks(a, c, n):
    assert intersection_number(block(*a), block(*c)) == n
    assert intersection_number(block(*c), block(*a)) == n


def test_intersection_errors():
    c = block(1, 2)
    assert intersection_number(c, c) == 0
    with pytest.raises(MalformedKeyError):
        intersection_number(c, block_curve(8, (1, 2)))


def test_intersection_is_invariant():
    rng = random.Random(11)
    w = dehn_twist_word(7, (3, 4))
    a, c = block(1, 2, 3), block(2, 3, 4)
    assert intersection_number(apply_word(w, a), apply_word(w, c)) == 2
    for _ in range(5):
        x, y = random_curve(7, rng), random_curve(7, rng)


def test_long_words_keep_intersection():
    rng = random.Random(20)
    w = random_word(7, 20, rng)
    a, c = block(1, 2, 3), block(2, 3, 4)
    assert intersection_number(apply_word(w, a), apply_word(w, c)) == 2
    assert intersection_number(apply_word(w, a), apply_word(w, block(5, 6))) == 0


@pytest.mark.slow
def test_long_words_on_random_pairs():
    rng = random.Random(7)
    for _ in range(10):
        a, c = random_curve(7, rng, 20), random_curve(7, rng, 20)
        w = random_word(7, 20, rng)
        assert intersection_number(apply_word(w, a), apply_word(w, c)) == intersection_number(a, c)


def test_crossing_sweep_matches_pairs():
    rng = random.Random(5)
    cfg = add_curve(realize(random_curve(7, rng, 8)), random_curve(7, rng, 8))
    for disk in (LOWER, UPPER):
        chords = cfg.chords(disk)
        pairs = {frozenset((x, y)) for x in chords for y in chords if cfg.cross(x, y)}
        assert {frozenset((x, y)) for _, x, y in cfg.crossings(disk)} == pairs
        assert intersection_number(x, y) == intersection_number(y, x)


@pytest.mark.parametrize('b', [5, 6])
def test_realize_roundtrip(b):
    for c in enumerate_curves(b, 8):
        assert extract_key(realize(c)) == c


def test_enumerate_contains_blocks():
    curves = enumerate_curves(5, 6)
    for i in range(1, 6):
        assert block_curve(5, (i, i % 5 + 1)) in curves
    assert curves == sorted(curves, key=lambda c: c.weights)


def test_equality_criterion():
    curves = enumerate_curves(6, 8)
    for i, a in enumerate(curves):
        for c in curves[i:]:
            same = intersection_number(a, c) == 0 and separation(a) == separation(c)
            assert curves_equal(a, c) == same


def test_extract_key_needs_one_curve():
    with pytest.raises(SingleCurveExpectedError):
        extract_key(realize_family([block(1, 2), block(4, 5)]))
    with pytest.raises(SingleCurveExpectedError):
        realize_family([])


def test_tauten():
    cfg = add_curve(realize(block(1, 2, 3)), block(2, 3, 4))
    assert cfg.crossing_count(0, 1) >= 2
    taut = tauten(cfg)
    assert taut.crossing_count(0, 1) == 2
    assert tauten(taut).crossing_count(0, 1) == 2


def test_arrangement():
    cfg = realize_family([block(1, 2, 3), block(2, 3, 4)])
    arr = arrangement(cfg)
    assert arr.crossing_count == 2
    assert arr.euler_ok()
    assert minimality_certificate(cfg)
    assert minimality_certificate(realize(block(3, 4, 5)))


def test_complement_components():
    comps = complement_components([block(1, 2)])
    assert [(sorted(c.punctures), c.boundary_count) for c in comps] == [([1, 2], 1), ([3, 4, 5, 6, 7], 1)]
    comps = complement_components([block(1, 2), block(4, 5)])
    assert sorted(c.complexity for c in comps) == [0, 0, 2]
    with pytest.raises(NotAMulticurveError):
        complement_components([block(1, 2), block(2, 3)])
    assert not complement_components([])


@pytest.mark.parametrize('b', [7, 8])
def test_complement_of_pants_decomposition(b):
    family = [block_curve(b, range(1, k + 1)) for k in range(2, b - 1)]
    comps = complement_components(apply_all(random_word(b, 6, random.Random(b)), family))
    assert sorted(p for c in comps for p in c.punctures) == list(range(1, b + 1))
    assert sum(2 - len(c.punctures) - c.boundary_count for c in comps) == 2 - b
    assert len(comps) == len(family) + 1
    assert all(c.complexity == 0 for c in comps)


def test_loosen_adds_a_bigon():
    cfg = realize_family([block(1, 2, 3), block(1, 2, 3, 4)])
    assert minimality_certificate(cfg)
    loose = loosen(cfg)
    assert loose is not None
    assert not minimality_certificate(loose)
    assert loosen(realize(block(1, 2, 3))) is None


def test_filled_subsurface():
    fs = filled_subsurface(block(1, 2, 3), block(2, 3, 4))
    assert fs.component.punctures == {1, 4}
    assert fs.component.boundary_count == 2
    assert set(fs.boundary) == {block(2, 3), block(5, 6, 7)}
    assert fs.hull.punctures == {1, 2, 3, 4}
    assert fs.hull_boundary == (block(5, 6, 7),)
    with pytest.raises(NotFillingError):
        filled_subsurface(block(1, 2), block(4, 5))


def test_resolve_gives_common_neighbours():
    a, c = block(1, 2, 3), block(2, 3, 4)
    found = []
    for flip in (False, True):
        ks = [k for k in resolve(a, c, flip) if separation(k).side_a == {1, 4}]
        assert ks
        found.extend(ks)
    assert len(set(found)) == 2


def test_output():
    cfg = realize_family([block(1, 2, 3), block(2, 3, 4)])
    data = json.loads(dump_json(cfg))
    assert data['b'] == 7
    assert len(data['words']) == 2
    assert data['frame']['infinity'] == 7
    svg = to_svg(cfg)
    assert svg.startswith('<svg')
    assert svg.count('<polygon') == 2
