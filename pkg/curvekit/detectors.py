from __future__ import annotations

import dataclasses
import itertools
import logging
from collections import deque
from collections.abc import Iterable, Sequence

import networkx as nx

from .curves import (
    CurveKey,
    MappingWord,
    TransporterMismatchError,
    apply_word,
    block_curve,
    classify,
    enumerate_curves,
    nested_separations,
    separates,
    separation,
    side_of,
)
from .engine import complement_structure, filled_subsurface, intersection_number
from .errors import CurvekitError, UnsupportedError
from .farey import (
    FrameRequiredError,
    link_as_farey,
    link_window_around,
    slope_intersection,
    triangles_on_edge,
)
from .rigid import ChordGraph, Vertex, simplices, twist_letter

log = logging.getLogger(__name__)


class NotSurroundingError(CurvekitError):
    pass


class NotOneSeparatingError(CurvekitError):
    pass


class FacetError(CurvekitError):
    pass


class BizarreConditionError(CurvekitError):
    pass


class NotOneSeparatingStartError(BizarreConditionError):
    pass


class SeparationOrderError(BizarreConditionError):
    pass


class AnnulusPunctureError(BizarreConditionError):
    pass


class PeripheralShapeError(BizarreConditionError):
    pass


def _meet(a: CurveKey, c: CurveKey) -> bool:
    return intersection_number(a, c) > 0


def _miss(a: CurveKey, c: CurveKey) -> bool:
    'distinct and disjoint; separations are checked first'
    return a != c and nested_separations(separation(a), separation(c)) and intersection_number(a, c) == 0


def is_chain(seq: Sequence[CurveKey], closed: bool = False) -> bool:
    'consecutive curves cross, all other pairs are disjoint'
    n = len(seq)
    if n < 2 or len(set(seq)) != n:
        return False
    for i, j in itertools.combinations(range(n), 2):
        consecutive = j - i == 1 or (closed and n > 2 and (i, j) == (0, n - 1))
        if consecutive != _meet(seq[i], seq[j]):
            return False
    return True


# special intersections


def _check_facet(b: int, P: Sequence[CurveKey]):
    if len(P) != b - 4:
        raise FacetError(f'facet of S_0,{b} has {b - 4} curves, got {len(P)}')
    for x, y in itertools.combinations(P, 2):
        if not _miss(x, y):
            raise FacetError('facet curves are not pairwise disjoint')


def _default_window(curves: Iterable[CurveKey]) -> int:
    return max(c.weight for c in curves) + 4


def detect_special_intersection(
    alpha: CurveKey,
    beta: CurveKey,
    P: Sequence[CurveKey],
    window: int | None = None,
    pool: Iterable[CurveKey] | None = None,
) -> tuple[CurveKey, CurveKey] | None:
    'gamma, delta with (gamma, alpha, beta, delta) a chain, both crossing the same single curve of P'
    b = alpha.b
    P = list(P)
    _check_facet(b, P)
    for c in (alpha, beta):
        if not all(_miss(c, x) for x in P):
            raise FacetError('curve does not complete the facet')
    if not _meet(alpha, beta):
        return None
    if pool is None:
        W = window or _default_window(P + [alpha, beta])
        pool = enumerate_curves(b, W)
    pool = [c for c in dict.fromkeys(pool) if c not in P and c not in (alpha, beta)]

    def crossed(c: CurveKey) -> list[int]:
        return [k for k, x in enumerate(P) if not _miss(c, x)]

    gammas, deltas = [], []
    for c in pool:
        hit = crossed(c)
        if len(hit) != 1:
            continue
        if _meet(c, alpha) and _miss(c, beta):
            gammas.append((c, hit[0]))
        elif _meet(c, beta) and _miss(c, alpha):
            deltas.append((c, hit[0]))
    log.debug('special intersection: %d gamma, %d delta candidates', len(gammas), len(deltas))
    for gamma, eg in gammas:
        for delta, ed in deltas:
            if eg == ed and _miss(gamma, delta):
                return gamma, delta
    return None


@dataclasses.dataclass(frozen=True)
class TwistVerdict:
    status: str  # fixed, two-twists, mismatch, no-facet
    expected: tuple[CurveKey, ...]
    found: tuple[CurveKey, ...]
    facets: int = 0

    @property
    def ok(self) -> bool:
        return self.status in ('fixed', 'two-twists')

    def to_json(self) -> dict:
        return {
            'status': self.status,
            'expected': [c.to_json() for c in self.expected],
            'found': [c.to_json() for c in self.found],
            'facets': self.facets,
        }


def halftwist_characterization_check(X: ChordGraph, alpha: Vertex, beta: Vertex, limit: int = 12) -> TwistVerdict:
    'in the link of every facet around alpha and beta, the curves meeting both twice are the two half twists'
    a, c = X.curve(alpha), X.curve(beta)
    k = twist_letter(X, beta)
    plus, minus = apply_word(MappingWord.H(k, 1), a), apply_word(MappingWord.H(k, -1), a)
    if X.disjoint(alpha, beta):
        status = 'fixed' if plus == a and minus == a else 'mismatch'
        return TwistVerdict(status, (a,), (plus, minus))
    expected = tuple(sorted({plus, minus}))
    facets = 0
    for facet in simplices(X, sorted(X.link([alpha, beta])), X.b - 4):
        P = [X.curve(v) for v in facet]
        try:
            window = link_window_around(X.b, P, (a, c), limit)
            sa, sc = link_as_farey(X.b, P, a), link_as_farey(X.b, P, c)
        except FrameRequiredError:
            continue
        if window is None:
            continue
        facets += 1
        found = tuple(
            sorted(
                x
                for s, x in window.items()
                if x not in (a, c) and slope_intersection(s, sa) == 2 and slope_intersection(s, sc) == 2
            )
        )
        farey_ok = {s for s, x in window.items() if x in found} == set(triangles_on_edge(sa, sc))
        if found != expected or len(expected) != 2 or not farey_ok:
            return TwistVerdict('mismatch', expected, found, facets)
    if not facets:
        return TwistVerdict('no-facet', expected, ())
    return TwistVerdict('two-twists', expected, expected, facets)


# surrounding pairs and triples


@dataclasses.dataclass(frozen=True)
class SurroundingCertificate:
    kind: str  # pair, triple
    curves: tuple[CurveKey, ...]
    omega: CurveKey

    def to_json(self) -> dict:
        return {'kind': self.kind, 'curves': [c.to_json() for c in self.curves], 'omega': self.omega.to_json()}


def three_side(c: CurveKey) -> frozenset[int] | None:
    s = separation(c)
    sides = [x for x in s.blocks if len(x) == 3]
    return sides[0] if len(sides) == 1 else None


def is_surrounding_pair(alpha: CurveKey, beta: CurveKey) -> SurroundingCertificate | None:
    if alpha.b != beta.b or alpha.b < 7:
        return None
    if not (classify(alpha).strongly_separating and classify(beta).strongly_separating):
        return None
    A, B = three_side(alpha), three_side(beta)
    if A is None or B is None or len(A & B) != 2:
        return None
    if intersection_number(alpha, beta) != 2:
        return None
    fs = filled_subsurface(alpha, beta)
    if fs.component.punctures != A ^ B:
        return None
    omega = [w for w in fs.boundary if A & B in separation(w).blocks]
    if len(omega) != 1:
        return None
    return SurroundingCertificate('pair', (alpha, beta), omega[0])


def is_surrounding_triple(alpha: CurveKey, beta: CurveKey, gamma: CurveKey) -> SurroundingCertificate | None:
    certs = [is_surrounding_pair(x, y) for x, y in ((alpha, beta), (beta, gamma), (alpha, gamma))]
    if any(c is None for c in certs) or len({c.omega for c in certs}) != 1:
        return None
    return SurroundingCertificate('triple', (alpha, beta, gamma), certs[0].omega)


def surrounding_triple_by_adjacency(alpha: CurveKey, beta: CurveKey, gamma: CurveKey, window: int = 0) -> bool:
    'pairwise surrounding pairs with no one-separating curve of the window missing all three'
    if alpha.b != 7:
        raise UnsupportedError(f'adjacency test needs S_0,7, got b = {alpha.b}')
    triple = (alpha, beta, gamma)
    if any(is_surrounding_pair(x, y) is None for x, y in itertools.combinations(triple, 2)):
        return False
    W = window or _default_window(triple)
    for d in enumerate_curves(alpha.b, W):
        if classify(d).one_separating and all(_miss(d, x) for x in triple):
            log.debug('%s misses all three curves', list(d.word))
            return False
    return True


@dataclasses.dataclass(frozen=True)
class ChainResult:
    status: str  # found, unresolved
    pairs: tuple[tuple[CurveKey, CurveKey], ...]
    depth: int

    def to_json(self) -> dict:
        return {
            'status': self.status,
            'depth': self.depth,
            'pairs': [[x.to_json(), y.to_json()] for x, y in self.pairs],
        }


def triple_chain(
    pair1: tuple[CurveKey, CurveKey],
    pair2: tuple[CurveKey, CurveKey],
    generators: Sequence[MappingWord],
    depth: int = 4,
) -> ChainResult:
    'pairs linked by moves (x, y) -> (g(x), y) where (x, y, g(x)) is a surrounding triple'
    moves = [g for w in generators for g in (w, w.inverse())]
    target = frozenset(pair2)
    start = (pair1[0], pair1[1])
    parent: dict[frozenset, tuple | None] = {frozenset(start): None}
    pair_of = {frozenset(start): start}
    queue = deque([(start, 0)])
    while queue:
        (x, y), d = queue.popleft()
        if frozenset((x, y)) == target:
            path = []
            key: frozenset | None = frozenset((x, y))
            while key is not None:
                path.append(pair_of[key])
                key = parent[key]
            return ChainResult('found', tuple(reversed(path)), len(path) - 1)
        if d >= depth:
            continue
        for u, v in ((x, y), (y, x)):
            for g in moves:
                gu = apply_word(g, u)
                if gu in (u, v):
                    continue
                nxt = (gu, v)
                key = frozenset(nxt)
                if key in parent or is_surrounding_triple(u, v, gu) is None:
                    continue
                parent[key] = frozenset((x, y))
                pair_of[key] = nxt
                queue.append((nxt, d + 1))
    log.warning('triple chain not found within depth %d (%d pairs seen)', depth, len(parent))
    return ChainResult('unresolved', (), depth)


def disjoint_surrounding_witness(
    omega: CurveKey, omega2: CurveKey, pool: Sequence[CurveKey]
) -> tuple[CurveKey, CurveKey, CurveKey, CurveKey] | None:
    'surrounding pairs (a, b) of omega and (a2, b2) of omega2 from the pool with a, a2 disjoint'
    pool = list(dict.fromkeys(pool))
    around: dict[CurveKey, list[tuple[CurveKey, CurveKey]]] = {omega: [], omega2: []}
    for x, y in itertools.combinations(pool, 2):
        cert = is_surrounding_pair(x, y)
        if cert is not None and cert.omega in around:
            around[cert.omega].extend(((x, y), (y, x)))
    for a, b in around[omega]:
        for a2, b2 in around[omega2]:
            if _miss(a, a2):
                return a, b, a2, b2
    return None


# heptagon and octagon


def standard_heptagon(b: int = 7) -> list[CurveKey]:
    return [block_curve(b, (i, i % 7 + 1, (i + 1) % 7 + 1)) for i in (1, 4, 7, 3, 6, 2, 5)]


@dataclasses.dataclass(frozen=True)
class HeptagonCertificate:
    cycle: tuple[CurveKey, ...]
    word: MappingWord

    def to_json(self) -> dict:
        return {'cycle': [c.to_json() for c in self.cycle], 'word': self.word.to_json()}

    def violations(self) -> list[str]:
        out = []
        n = len(self.cycle)
        for i in range(n):
            if _meet(self.cycle[i], self.cycle[(i + 1) % n]):
                out.append(f'edge {i} crosses')
        seps = {frozenset(separation(c).blocks) for c in self.cycle}
        if len(seps) != n:
            out.append('separations repeat')
        for i in range(n):
            if is_surrounding_pair(self.cycle[i], self.cycle[(i + 2) % n]) is None:
                out.append(f'pair {i}, {(i + 2) % n} not surrounding')
        return out


def heptagon_certificate(pair: tuple[CurveKey, CurveKey], word: MappingWord = MappingWord()) -> HeptagonCertificate:
    alpha, beta = pair
    if alpha.b != 7:
        raise UnsupportedError('heptagons live on S_0,7')
    std = {block_curve(7, (1, 2, 3)), block_curve(7, (2, 3, 4))}
    if {apply_word(word, c) for c in std} != {alpha, beta}:
        raise TransporterMismatchError(f'{word} does not carry the standard pair to the given pair')
    if is_surrounding_pair(alpha, beta) is None:
        raise NotSurroundingError('not a surrounding pair')
    return HeptagonCertificate(tuple(apply_word(word, c) for c in standard_heptagon()), word)


@dataclasses.dataclass
class OctagonCertificate:
    graph: nx.Graph
    embedding: dict[int, CurveKey]

    def to_json(self) -> dict:
        return {
            'vertices': [{'id': v, 'curve': self.embedding[v].to_json()} for v in sorted(self.graph.nodes)],
            'edges': sorted([min(e), max(e)] for e in self.graph.edges),
        }


def octagon_certificate(b: int = 8) -> OctagonCertificate:
    if b != 8:
        raise UnsupportedError('the octagon graph lives on S_0,8')
    embedding = {i: block_curve(8, (i, i % 8 + 1, (i + 1) % 8 + 1)) for i in range(1, 9)}
    g = nx.Graph()
    g.add_nodes_from(embedding)
    g.add_edges_from(
        (i, j) for i, j in itertools.combinations(embedding, 2) if intersection_number(embedding[i], embedding[j]) == 0
    )
    return OctagonCertificate(g, embedding)


def surrounding_pair_via_O(u: int, v: int, O: OctagonCertificate) -> bool:  # pylint: disable=invalid-name
    'exactly two paths of length 2 between u and v'
    return u != v and len(list(nx.common_neighbors(O.graph, u, v))) == 2


# divisions


@dataclasses.dataclass(frozen=True)
class DivisionWitness:
    alpha_plus: CurveKey
    alpha_minus: CurveKey
    beta_plus: CurveKey
    beta_minus: CurveKey
    delta: CurveKey
    plus: tuple[CurveKey, ...]
    minus: tuple[CurveKey, ...]
    window: int

    def complete(self, witnesses: int) -> bool:
        return len(self.plus) >= witnesses and len(self.minus) >= witnesses

    def to_json(self) -> dict:
        return {
            'alpha+': self.alpha_plus.to_json(),
            'alpha-': self.alpha_minus.to_json(),
            'beta+': self.beta_plus.to_json(),
            'beta-': self.beta_minus.to_json(),
            'delta': self.delta.to_json(),
            'plus': [c.to_json() for c in self.plus],
            'minus': [c.to_json() for c in self.minus],
            'window': self.window,
        }


def strongly_separating_boundary(a: CurveKey, c: CurveKey) -> CurveKey | None:
    'the only strongly separating boundary curve of the hull filled by a and c'
    found = [d for d in filled_subsurface(a, c).hull_boundary if classify(d).strongly_separating]
    return found[0] if len(found) == 1 else None


def is_square(ap: CurveKey, am: CurveKey, bp: CurveKey, bm: CurveKey) -> bool:
    'ap - am - bp - bm - ap disjoint around, diagonals crossing'
    return (
        _miss(ap, am) and _miss(am, bp) and _miss(bp, bm) and _miss(bm, ap) and _meet(ap, bp) and _meet(am, bm)
    )


def filled_division(
    alpha_plus: CurveKey,
    alpha_minus: CurveKey,
    beta_plus: CurveKey,
    beta_minus: CurveKey,
    window: int | None = None,
    witnesses: int = 10,
) -> DivisionWitness | None:
    curves = (alpha_plus, alpha_minus, beta_plus, beta_minus)
    b = alpha_plus.b
    if b < 7:
        raise UnsupportedError('divisions need b >= 7')
    if not all(classify(c).one_separating for c in curves):
        raise NotOneSeparatingError('division curves must be one-separating')
    if not is_square(*curves):
        return None
    delta = strongly_separating_boundary(alpha_plus, beta_plus)
    if delta is None or delta != strongly_separating_boundary(alpha_minus, beta_minus):
        return None
    if any(intersection_number(delta, c) for c in curves):
        return None
    W = window or _default_window(curves + (delta,))
    plus_side = side_of(delta, alpha_plus)
    found: dict[bool, list[CurveKey]] = {True: [], False: []}
    # witnesses = 0 only reconstructs delta
    for c in enumerate_curves(b, W) if witnesses else ():
        if c == delta or c in curves or not _miss(c, delta):
            continue
        on_plus = side_of(delta, c) == plus_side
        lst = found[on_plus]
        if len(lst) >= witnesses:
            continue
        # P+ = Lk(alpha-) & Lk(beta-), P- = Lk(alpha+) & Lk(beta+)
        other = (alpha_minus, beta_minus) if on_plus else (alpha_plus, beta_plus)
        if all(_miss(c, x) for x in other):
            lst.append(c)
        if all(len(v) >= witnesses for v in found.values()):
            break
    if min(len(v) for v in found.values()) < witnesses:
        log.warning('division witnesses below %d within window %d', witnesses, W)
    return DivisionWitness(
        alpha_plus, alpha_minus, beta_plus, beta_minus, delta, tuple(found[True]), tuple(found[False]), W
    )


def bizarre_simplex(delta: Sequence[CurveKey]):
    'the peripheral component cut out by the last curve of an ordered simplex'
    delta = list(delta)
    if not delta:
        raise BizarreConditionError('empty simplex')
    b = delta[0].b
    if b < 9:
        raise UnsupportedError('bizarre simplices need b >= 9')
    if len(delta) != b - 8:
        raise BizarreConditionError(f'expected {b - 8} curves, got {len(delta)}')
    if not classify(delta[0]).one_separating:
        raise NotOneSeparatingStartError('first curve is not one-separating')
    for i in range(1, len(delta) - 1):
        if not separates(delta[i], delta[i - 1], delta[i + 1]):
            raise SeparationOrderError(f'curve {i} does not separate its neighbours')
    comps, edges = complement_structure(delta)
    faces_of = {ci: {x, y} for x, y, ci in edges}
    for i in range(len(delta) - 1):
        shared = faces_of[i] & faces_of[i + 1]
        if len(shared) != 1:
            raise SeparationOrderError(f'curves {i} and {i + 1} do not bound a common component')
        annulus = comps[shared.pop()]
        if len(annulus.punctures) != 1 or annulus.boundary_count != 2:
            n = len(annulus.punctures)
            raise AnnulusPunctureError(f'component between curves {i} and {i + 1} has {n} punctures')
    last = faces_of[len(delta) - 1]
    if len(delta) > 1:
        outer = last - faces_of[len(delta) - 2]
    else:
        outer = {max(last, key=lambda f: len(comps[f].punctures))}
    peripheral = comps[outer.pop()]
    if len(peripheral.punctures) != 6 or peripheral.boundary_count != 1:
        raise PeripheralShapeError(f'peripheral component is {peripheral}')
    return peripheral
