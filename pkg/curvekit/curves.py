from __future__ import annotations

import dataclasses
import logging
import random
from collections.abc import Iterable, Iterator
from functools import lru_cache

from . import triangulation as tri
from .errors import CurvekitError, InessentialCurveError, MalformedKeyError

log = logging.getLogger(__name__)


class TransporterMismatchError(CurvekitError):
    pass


class NotInLinkError(CurvekitError):
    pass


@dataclasses.dataclass(frozen=True, order=True)
class CurveKey:
    'normal coordinates of an essential simple closed curve on S_{0,b}'

    b: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.b < 4:
            raise MalformedKeyError(f'b = {self.b} < 4')
        object.__setattr__(self, 'weights', tuple(int(w) for w in self.weights))
        tri.decode(self.b, self.weights)

    @property
    def word(self) -> tuple[int, ...]:
        return tri.decode(self.b, self.weights)

    @property
    def weight(self) -> int:
        return sum(self.weights)

    @classmethod
    def from_word(cls, b: int, word: Iterable[int]) -> CurveKey:
        'key_from_word: reduce, read off coordinates, check the decoded curve is the same word'
        w = tri.reduce_word(tri.cyclic(s, b) for s in word)
        if not w:
            raise InessentialCurveError('word reduces to the trivial curve')
        weights = tri.word_to_weights(b, w)
        key = cls(b, weights)
        if key.word not in tri.word_variants(w):
            raise MalformedKeyError(f'word {list(w)} is not a simple curve')
        return key

    def to_json(self) -> dict:
        return {'b': self.b, 'weights': list(self.weights)}

    @classmethod
    def from_json(cls, d: dict) -> CurveKey:
        try:
            return cls(int(d['b']), tuple(d['weights']))
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedKeyError(f'bad CurveKey JSON: {d!r}') from e


@dataclasses.dataclass(frozen=True)
class PunctureSeparation:
    b: int
    side_a: frozenset[int]
    side_b: frozenset[int]

    @classmethod
    def from_side(cls, b: int, side: Iterable[int]) -> PunctureSeparation:
        side = frozenset(side)
        rest = frozenset(range(1, b + 1)) - side
        if 1 not in side:
            side, rest = rest, side
        if len(side) < 2 or len(rest) < 2:
            raise InessentialCurveError(f'separation side of size < 2: {sorted(side)} | {sorted(rest)}')
        return cls(b, side, rest)

    @property
    def blocks(self) -> tuple[frozenset[int], frozenset[int]]:
        return (self.side_a, self.side_b)

    def to_json(self) -> dict:
        return {'b': self.b, 'sideA': sorted(self.side_a)}


@dataclasses.dataclass(frozen=True)
class CurveClass:
    s1: int
    s2: int

    @property
    def minimal(self) -> bool:
        return self.s1 == 2

    @property
    def one_separating(self) -> bool:
        return self.s1 == 3

    @property
    def strongly_separating(self) -> bool:
        return self.s1 >= 3

    def to_json(self) -> dict:
        return {
            'sides': [self.s1, self.s2],
            'minimal': self.minimal,
            'one_separating': self.one_separating,
            'strongly_separating': self.strongly_separating,
        }


@dataclasses.dataclass(frozen=True)
class MappingWord:
    'letters (i, sign); H_i is the half twist about the minimal curve around p_i, p_{i+1}'

    letters: tuple[tuple[int, int], ...] = ()

    @classmethod
    def H(cls, i: int, sign: int = 1) -> MappingWord:  # pylint: disable=invalid-name
        if sign not in (1, -1):
            raise ValueError(f'bad sign {sign}')
        return cls(((i, sign),))

    def __mul__(self, other: MappingWord) -> MappingWord:
        return MappingWord(self.letters + other.letters)

    def __pow__(self, k: int) -> MappingWord:
        if k < 0:
            return self.inverse() ** (-k)
        return MappingWord(self.letters * k)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> MappingWord:
        return MappingWord(tuple((i, -s) for i, s in reversed(self.letters)))

    def reduced(self) -> MappingWord:
        out: list[tuple[int, int]] = []
        for i, s in self.letters:
            if out and out[-1] == (i, -s):
                out.pop()
            else:
                out.append((i, s))
        return MappingWord(tuple(out))

    def to_json(self) -> list:
        return [['H', i, s] for i, s in self.letters]

    @classmethod
    def from_json(cls, data: list) -> MappingWord:
        try:
            letters = []
            for tag, i, s in data:
                if tag != 'H' or s not in (1, -1):
                    raise ValueError(tag)
                letters.append((int(i), int(s)))
        except (TypeError, ValueError) as e:
            raise MalformedKeyError(f'bad MappingWord JSON: {data!r}') from e
        return cls(tuple(letters))

    def __str__(self):
        if not self.letters:
            return '1'
        return ' '.join(f'H{i}' if s > 0 else f'H{i}^-1' for i, s in self.letters)


def _interval(b: int, interval: Iterable[int]) -> tuple[int, int]:
    'first and last puncture of a cyclic interval'
    I = {tri.cyclic(i, b) for i in interval}
    for i in sorted(I):
        if tri.cyclic(i - 1, b) not in I:
            run = [tri.cyclic(i + k, b) for k in range(len(I))]
            if set(run) == I:
                return i, run[-1]
            break
    raise InessentialCurveError(f'{sorted(I)} is not a cyclic interval of 1..{b}')


def block_curve(b: int, interval: Iterable[int]) -> CurveKey:
    I = set(interval)
    if not 2 <= len(I) <= b - 2:
        raise InessentialCurveError(f'block of size {len(I)} on S_0,{b}')
    first, last = _interval(b, I)
    return CurveKey.from_word(b, (tri.cyclic(first - 1, b), last))


def standard_minimal(b: int) -> CurveKey:
    return block_curve(b, (1, 2))


def separation(c: CurveKey) -> PunctureSeparation:
    return PunctureSeparation.from_side(c.b, tri.separation_side(c.b, c.word))


def classify(c: CurveKey) -> CurveClass:
    s = separation(c)
    s1, s2 = sorted((len(s.side_a), len(s.side_b)))
    return CurveClass(s1, s2)


def curves_equal(a: CurveKey, c: CurveKey) -> bool:
    return a == c


def _twist_letter(b: int, word: tuple[int, ...], i: int, sign: int) -> tuple[int, ...]:
    i = tri.cyclic(i, b)
    lo, hi = tri.cyclic(i - 1, b), tri.cyclic(i + 1, b)
    out: list[int] = []
    for k, s in enumerate(word):
        if s != i:
            out.append(s)
        elif (k % 2 == 0) == (sign > 0):
            out.extend((lo, i, hi))
        else:
            out.extend((hi, i, lo))
    return tri.reduce_word(out)


def apply_word(w: MappingWord, c: CurveKey) -> CurveKey:
    'right to left: apply_word(u * v, c) == apply_word(u, apply_word(v, c))'
    word = c.word
    for i, s in reversed(w.letters):
        word = _twist_letter(c.b, word, i, s)
    return CurveKey.from_word(c.b, word)


def apply_all(w: MappingWord, curves: Iterable[CurveKey]) -> list[CurveKey]:
    return [apply_word(w, c) for c in curves]


def braid_relations(b: int) -> list[tuple[MappingWord, MappingWord]]:
    'word pairs acting alike: the braid relation for neighbouring half twists, commutation for the rest'
    h = MappingWord.H
    out = []
    for i in range(1, b + 1):
        j = tri.cyclic(i + 1, b)
        out.append((h(i) * h(j) * h(i), h(j) * h(i) * h(j)))
        for j in range(i + 2, b + 1):
            if not (i == 1 and j == b):
                out.append((h(i) * h(j), h(j) * h(i)))
    return out


def half_twist_word(beta: CurveKey, transporter: MappingWord) -> MappingWord:
    if not classify(beta).minimal:
        raise TransporterMismatchError('half twists need a minimal curve')
    if apply_word(transporter, standard_minimal(beta.b)) != beta:
        raise TransporterMismatchError(f'{transporter} does not carry the standard minimal curve to {beta.word}')
    return transporter * MappingWord.H(1) * transporter.inverse()


def dehn_twist_word(b: int, interval: Iterable[int], transporter: MappingWord = MappingWord()) -> MappingWord:
    'Dehn twist about transporter(block(interval))'
    I = set(interval)
    if not 2 <= len(I) <= b - 2:
        raise InessentialCurveError(f'block of size {len(I)} on S_0,{b}')
    first, _ = _interval(b, I)
    core = MappingWord(tuple((tri.cyclic(first + k, b), 1) for k in range(len(I) - 1)))
    return transporter * core ** len(I) * transporter.inverse()


def nested_separations(s1: PunctureSeparation, s2: PunctureSeparation) -> bool:
    return any(x <= y for x in s1.blocks for y in s2.blocks)


def side_of(delta: CurveKey, alpha: CurveKey) -> frozenset[int]:
    'the block of separation(delta) on whose side the disjoint curve alpha lies'
    sd, sa = separation(delta), separation(alpha)
    for x in sd.blocks:
        if any(y <= x for y in sa.blocks):
            return x
    raise NotInLinkError('separations are not nested')


def separates(delta: CurveKey, alpha: CurveKey, beta: CurveKey) -> bool:
    from .engine import intersection_number  # pylint: disable=import-outside-toplevel

    if delta in (alpha, beta):
        raise NotInLinkError('delta equals one of the curves')
    if intersection_number(delta, alpha) or intersection_number(delta, beta):
        raise NotInLinkError('curves are not in the link of delta')
    return side_of(delta, alpha) != side_of(delta, beta)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _disk_heights(b: int, n: tuple[int, ...], budget: int) -> list[tuple[int, ...]]:
    'admissible (h_3..h_{b-1}) for one disk within budget'
    out = []

    def rec(s: int, h: int, acc: tuple[int, ...], used: int):
        # h = h_s; choose h_{s+1}
        if s == b - 1:
            end = n[b - 1]
            if (n[s - 1] + h + end) % 2 == 0 and abs(h - end) <= n[s - 1] <= h + end:
                out.append(acc)
            return
        ns = n[s - 1]
        for nxt in range(abs(h - ns), h + ns + 1, 2):
            if used + nxt > budget:
                break
            rec(s + 1, nxt, acc + (nxt,), used + nxt)

    rec(2, n[0], (), 0)
    return out


@lru_cache(maxsize=32)
def _enumerate(b: int, W: int) -> tuple[CurveKey, ...]:
    found = []
    for total in range(2, W + 1, 2):
        for n in _compositions(total, b):
            budget = W - total
            upper = _disk_heights(b, n, budget)
            if not upper:
                continue
            for hu in upper:
                for hl in _disk_heights(b, n, budget - sum(hu)):
                    weights = n + hu + hl
                    try:
                        tri.decode(b, weights)
                    except MalformedKeyError:
                        continue
                    found.append(CurveKey(b, weights))
    found.sort(key=lambda c: c.weights)
    log.debug('enumerate_curves b=%d W=%d: %d curves', b, W, len(found))
    return tuple(found)


def enumerate_curves(b: int, W: int) -> list[CurveKey]:
    'every curve with coordinate sum <= W, in lexicographic weight order'
    return list(_enumerate(b, W))


def random_word(b: int, length: int, rng: random.Random) -> MappingWord:
    return MappingWord(tuple((rng.randint(1, b), rng.choice((1, -1))) for _ in range(length)))


def random_curve(b: int, rng: random.Random, length: int = 6) -> CurveKey:
    size = rng.randint(2, b - 2)
    start = rng.randint(1, b)
    c = block_curve(b, [tri.cyclic(start + k, b) for k in range(size)])
    return apply_word(random_word(b, length, rng), c)
