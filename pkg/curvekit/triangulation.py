"""
Reference frame of S_{0,b}.

Punctures 1..b-1 sit at x = 1..b-1 on the real axis, puncture b at infinity.
The axis circle A through all punctures is cut into segments e_1..e_b:
e_i joins p_i to p_{i+1} (e_{b-1} runs to infinity) and e_b joins infinity
to p_1 along the negative axis. A bounds the upper disk U and the lower disk L.
Each disk is triangulated by the fan of diagonals p_1 p_k, k = 3..b-1.

Weights of a curve: [n_1..n_b, hU_3..hU_{b-1}, hL_3..hL_{b-1}] where n_s counts
crossings with e_s and hD_k counts crossings with the diagonal p_1 p_k in D.

A taut curve is also a cyclic word of segment labels; the arc from letter 2j
to letter 2j+1 lies in L, the next one in U.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from .errors import MalformedKeyError

log = logging.getLogger(__name__)

UPPER = 'U'
LOWER = 'L'
DISKS = (UPPER, LOWER)


def weight_length(b: int) -> int:
    return 3 * b - 6


def frame_metadata(b: int) -> dict:
    'the frozen triangulation, as written into reports and exports'
    segments = [[i, i + 1] for i in range(1, b)] + [[b, 1]]
    diagonals = [[1, k] for k in range(3, b)]
    return {
        'b': b,
        'infinity': b,
        'segments': segments,
        'diagonals': {UPPER: diagonals, LOWER: diagonals},
        'weights': ['n%d' % s for s in range(1, b + 1)]
        + ['hU%d' % k for k in range(3, b)]
        + ['hL%d' % k for k in range(3, b)],
    }


def cyclic(i: int, b: int) -> int:
    'label i reduced into 1..b'
    return (i - 1) % b + 1


def reduce_word(word) -> tuple[int, ...]:
    'free reduction of a cyclic word, keeping the L/U parity of the arcs'
    w = list(word)
    while True:
        out: list[int] = []
        for s in w:
            if out and out[-1] == s:
                out.pop()
            else:
                out.append(s)
        changed = len(out) != len(w)
        w = out
        while len(w) >= 2 and w[0] == w[-1]:
            # the U arc closing the word backtracks; the merged arc is an L arc
            w = [w[-2]] + w[1:-2]
            changed = True
        if not changed:
            return tuple(w)


def counts(b: int, word) -> list[int]:
    n = [0] * (b + 2)
    for s in word:
        n[s] += 1
    return n


def heights(b: int, word) -> dict[str, list[int]]:
    'h[D][k] for k = 1..b+1, counting D arcs with exactly one end on e_1..e_{k-1}'
    m = len(word)
    h = {UPPER: [0] * (b + 2), LOWER: [0] * (b + 2)}
    for k in range(m):
        disk = LOWER if k % 2 == 0 else UPPER
        s, t = sorted((word[k], word[(k + 1) % m]))
        # the arc crosses diagonals s+1..t
        for j in range(s + 1, t + 1):
            h[disk][j] += 1
    return h


def word_to_weights(b: int, word) -> tuple[int, ...]:
    n = counts(b, word)
    h = heights(b, word)
    return tuple(n[1 : b + 1]) + tuple(h[UPPER][3:b]) + tuple(h[LOWER][3:b])


def split_weights(b: int, weights) -> tuple[list[int], dict[str, list[int]]]:
    if len(weights) != weight_length(b):
        raise MalformedKeyError(f'expected {weight_length(b)} weights, got {len(weights)}')
    if any(w < 0 for w in weights):
        raise MalformedKeyError('negative weight')
    n = [0] + list(weights[:b]) + [0]
    h = {}
    for d, disk in enumerate(DISKS):
        inner = list(weights[b + d * (b - 3) : b + (d + 1) * (b - 3)])
        h[disk] = [0, 0, n[1]] + inner + [n[b], 0]
    return n, h


def _match_disk(b: int, n: list[int], h: list[int], disk: str) -> dict[tuple[int, int], tuple[int, int]]:
    partner: dict[tuple[int, int], tuple[int, int]] = {}
    stack: list[tuple[int, int]] = []
    for s in range(1, b + 1):
        total = n[s] + h[s] - h[s + 1]
        if total % 2 or not abs(h[s] - h[s + 1]) <= n[s] <= h[s] + h[s + 1]:
            raise MalformedKeyError(f'matching condition fails on e{s} in {disk}')
        closes = total // 2
        for j in range(n[s]):
            point = (s, j)
            if j < closes:
                if not stack:
                    raise MalformedKeyError(f'unmatched arc end on e{s} in {disk}')
                other = stack.pop()
                partner[point] = other
                partner[other] = point
            else:
                stack.append(point)
    if stack:
        raise MalformedKeyError(f'unmatched arc ends in {disk}')
    return partner


def decode_arcs(b: int, weights) -> dict[str, dict[tuple[int, int], tuple[int, int]]]:
    'per-disk matchings of the points (segment, index) of a multicurve'
    n, h = split_weights(b, weights)
    return {disk: _match_disk(b, n, h[disk], disk) for disk in DISKS}


def trace_components(arcs: dict[str, dict]) -> list[tuple[tuple[int, int], ...]]:
    'closed point sequences; every component starts at its least point with an L arc'
    seen = set()
    components = []
    for start in sorted(arcs[LOWER]):
        if start in seen:
            continue
        cycle = []
        point, disk = start, LOWER
        while True:
            cycle.append(point)
            seen.add(point)
            point = arcs[disk][point]
            cycle.append(point)
            seen.add(point)
            point = arcs[UPPER][point]
            if point == start:
                break
        components.append(tuple(cycle))
    return components


@lru_cache(maxsize=65536)
def decode(b: int, weights: tuple[int, ...]) -> tuple[int, ...]:
    'canonical cyclic word of the single essential curve with these weights'
    arcs = decode_arcs(b, weights)
    if not arcs[LOWER]:
        raise MalformedKeyError('empty curve')
    components = trace_components(arcs)
    if len(components) != 1:
        raise MalformedKeyError(f'weights describe {len(components)} curves')
    word = tuple(s for s, _ in components[0])
    side = separation_side(b, word)
    if min(len(side), b - len(side)) < 2:
        raise MalformedKeyError('curve bounds a disk with fewer than 2 punctures')
    log.debug('decoded b=%d weights=%s', b, weights)
    return word


def separation_side(b: int, word) -> frozenset[int]:
    'punctures on the side of p_1'
    n = counts(b, word)
    side = set()
    crossings = 0
    for k in range(1, b + 1):
        if crossings % 2 == 0:
            side.add(k)
        crossings += n[k]
    return frozenset(side)


def word_variants(word) -> set[tuple[int, ...]]:
    'all presentations of the same cyclic word that keep the first arc in L'
    m = len(word)
    out = set()
    for w in (tuple(word), tuple(reversed(word))):
        for r in range(0, m, 2):
            out.add(w[r:] + w[:r])
    return out
