"""
Verification suites: named groups of checks run against a Config and collected into a
deterministic report.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
import random
from collections.abc import Callable

import networkx as nx

from . import __version__
from .config import Config
from .curves import (
    CurveKey,
    MappingWord,
    apply_all,
    apply_word,
    block_curve,
    braid_relations,
    classify,
    dehn_twist_word,
    enumerate_curves,
    random_curve,
    random_word,
    separation,
)
from .detectors import (
    bizarre_simplex,
    filled_division,
    halftwist_characterization_check,
    heptagon_certificate,
    is_surrounding_pair,
    is_surrounding_triple,
    octagon_certificate,
    surrounding_pair_via_O,
    surrounding_triple_by_adjacency,
    triple_chain,
)
from .engine import (
    arrangement,
    complement_components,
    extract_key,
    intersection_number,
    loosen,
    minimality_certificate,
    realize,
    realize_family,
)
from .farey import (
    INFINITY,
    ZERO,
    Slope,
    edge_triangle_violations,
    half_twist_on_slope,
    link_as_farey,
    slope_intersection,
    triangles_on_edge,
)
from .rigid import (
    build_rigid_set,
    complete_star,
    copy_agreement_check,
    embedding_violations,
    extension_uniqueness_check,
    minimal_vertices,
    special_pentagon_certificate,
    twist_letter,
)
from .supports import (
    HingeType,
    Support,
    classify_support,
    completable_types,
    completions_by_trees,
    completions_of,
    config_tree,
    enumerate_complete_support_types,
    hinge_compatible,
    member_types,
    nu_by_compositions,
    terminal_fingerprint,
)
from .thread_utils import run_parallel
from .utils import FilterString

log = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
UNRESOLVED = 'unresolved'

SUITES = ('core', 'engine', 'farey', 'rigidset', 'detectors', 'supports')


@dataclasses.dataclass
class CheckResult:
    status: str
    detail: dict = dataclasses.field(default_factory=dict)
    reproducer: dict | None = None
    certificate: dict | None = None  # written next to the report as <check id>.json


@dataclasses.dataclass(frozen=True)
class Check:
    id: str
    suite: str
    anchor: str
    func: Callable[[Config], CheckResult]


@dataclasses.dataclass
class CheckRecord:
    id: str
    anchor: str
    result: CheckResult

    def to_json(self) -> dict:
        out = {'id': self.id, 'anchor': self.anchor, 'status': self.result.status, 'detail': self.result.detail}
        if self.result.reproducer is not None:
            out['reproducer'] = self.result.reproducer
        if self.result.certificate is not None:
            out['certificate'] = f'{self.id}.json'
        return out


@dataclasses.dataclass
class SuiteReport:
    suite: str
    records: list[CheckRecord]
    config: dict

    @property
    def totals(self) -> dict:
        out = {PASS: 0, FAIL: 0, UNRESOLVED: 0}
        for r in self.records:
            out[r.result.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        t = self.totals
        if t[FAIL]:
            return 1
        if t[UNRESOLVED]:
            return 2
        return 0

    def to_json(self) -> dict:
        return {
            'schema': 'curvekit.report.v1',
            'version': __version__,
            'suite': self.suite,
            'config': self.config,
            'checks': [r.to_json() for r in self.records],
            'totals': self.totals,
        }

    def certificates(self) -> list[tuple[str, dict]]:
        return [(r.id, r.result.certificate) for r in self.records if r.result.certificate is not None]

    def lines(self) -> list[str]:
        'check id, status and scalar details in aligned columns, then the totals'
        width = max([len('check')] + [len(r.id) for r in self.records])
        out = [f'{"check":<{width}}  {"status":<10}  detail']
        for r in self.records:
            brief = ', '.join(f'{k}={v}' for k, v in r.result.detail.items() if isinstance(v, (int, str, bool)))
            out.append(f'{r.id:<{width}}  {r.result.status:<10}  {brief}'.rstrip())
        t = self.totals
        out.append(f'{t[PASS]} passed, {t[FAIL]} failed, {t[UNRESOLVED]} unresolved')
        return out


REGISTRY: list[Check] = []


def check(suite: str, id_: str, anchor: str):
    def deco(func: Callable[[Config], CheckResult]):
        REGISTRY.append(Check(f'{suite}-{id_}', suite, anchor, func))
        return func

    return deco


def _verdict(ok: bool, **detail) -> CheckResult:
    return CheckResult(PASS if ok else FAIL, detail)


def _rng(cfg: Config, salt: str) -> random.Random:
    return random.Random(f'{cfg.seed}:{salt}')


def standard_facet(b: int) -> list:
    'blocks 4..k, k = 5..b; their complement has the four holes 1, 2, 3 and 4..b'
    return [block_curve(b, range(4, k + 1)) for k in range(5, b + 1)]


# core


@check('core', 'block-weights', 'coordinates of the standard minimal curve')
def _block_weights(cfg: Config) -> CheckResult:
    c = block_curve(cfg.b, (1, 2))
    return _verdict(c.weight == 2 * cfg.b - 4, weight=c.weight)


@check('core', 'disjoint-separations', 'disjoint curves have nested, distinct separations')
def _disjoint_separations(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'disjoint')
    b = cfg.b
    pair = (block_curve(b, (1, 2)), block_curve(b, (1, 2, 3)))
    for _ in range(cfg.samples):
        w = random_word(b, cfg.word_length, rng)
        x, y = (separation(apply_word(w, c)) for c in pair)
        nested = any(u <= v for u in x.blocks for v in y.blocks)
        if not nested or x == y:
            return CheckResult(FAIL, {}, {'word': w.to_json()})
    return _verdict(True, samples=cfg.samples)


@check('core', 'twist-separations', 'Dehn twists fix every puncture')
def _twist_separations(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'twist')
    b = cfg.b
    for _ in range(cfg.samples):
        c = random_curve(b, rng, length=cfg.word_length)
        size, start = rng.randint(2, b - 2), rng.randint(1, b)
        t = dehn_twist_word(b, [(start + k - 1) % b + 1 for k in range(size)])
        if separation(apply_word(t, c)) != separation(c):
            return CheckResult(FAIL, {}, {'curve': c.to_json(), 'twist': t.to_json()})
    return _verdict(True, samples=cfg.samples)


@check('core', 'inverse-words', 'a word followed by its inverse is the identity')
def _inverse_words(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'inverse')
    for _ in range(cfg.samples):
        c = random_curve(cfg.b, rng)
        w = random_word(cfg.b, cfg.word_length, rng)
        if apply_word(w.inverse(), apply_word(w, c)) != c:
            return CheckResult(FAIL, {}, {'curve': c.to_json(), 'word': w.to_json()})
    return _verdict(True, samples=cfg.samples)


@check('core', 'braid-relations', 'neighbouring half twists satisfy the braid relation, the others commute')
def _braid_relations(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'braid')
    relations = braid_relations(cfg.b)
    curves = [random_curve(cfg.b, rng) for _ in range(min(cfg.samples, 20))]
    for lhs, rhs in relations:
        for c in curves:
            if apply_word(lhs, c) != apply_word(rhs, c):
                return CheckResult(FAIL, {}, {'curve': c.to_json(), 'lhs': lhs.to_json(), 'rhs': rhs.to_json()})
    return _verdict(True, relations=len(relations), curves=len(curves))


# engine


@check('engine', 'roundtrip', 'realize then extract is the identity')
def _roundtrip(cfg: Config) -> CheckResult:
    total = 0
    for b in (5, 6):
        for c in enumerate_curves(b, cfg.window or 8):
            total += 1
            if extract_key(realize(c)) != c:
                return CheckResult(FAIL, {}, {'curve': c.to_json()})
    return _verdict(True, curves=total)


def _random_pairs(cfg: Config, salt: str, length: int, count: int) -> list[tuple[CurveKey, CurveKey]]:
    'pairs of curves moved by words of length 1..length'
    rng = _rng(cfg, salt)

    def one() -> CurveKey:
        return random_curve(cfg.b, rng, rng.randint(1, length))

    return [(one(), one()) for _ in range(count)]


@check('engine', 'symmetry', 'intersection numbers are symmetric and mapping class invariant')
def _symmetry(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'symmetry-words')
    for a, c in _random_pairs(cfg, 'symmetry', cfg.word_length, cfg.samples):
        w = random_word(cfg.b, rng.randint(1, cfg.word_length), rng)
        i = intersection_number(a, c)
        if intersection_number(c, a) != i or intersection_number(apply_word(w, a), apply_word(w, c)) != i:
            return CheckResult(FAIL, {}, {'a': a.to_json(), 'c': c.to_json(), 'word': w.to_json()})
    return _verdict(True, samples=cfg.samples, word_length=cfg.word_length)


@check('engine', 'euler', 'faces of a taut pair satisfy the Euler count')
def _euler(cfg: Config) -> CheckResult:
    pairs = _random_pairs(cfg, 'euler', min(cfg.word_length, 6), min(cfg.samples, 50))
    for a, c in pairs:
        if a == c:
            continue
        if not arrangement(realize_family([a, c])).euler_ok():
            return CheckResult(FAIL, {}, {'a': a.to_json(), 'c': c.to_json()})
    return _verdict(True, samples=len(pairs))


@check('engine', 'minimality', 'taut pairs bound no bigon; one swapped pair of points makes one')
def _minimality(cfg: Config) -> CheckResult:
    pairs = _random_pairs(cfg, 'minimality', min(cfg.word_length, 6), min(cfg.samples, 50))
    checked = 0
    for a, c in pairs:
        if a == c:
            continue
        taut = realize_family([a, c])
        loose = loosen(taut)
        if not minimality_certificate(taut) or (loose is not None and minimality_certificate(loose)):
            return CheckResult(FAIL, {}, {'a': a.to_json(), 'c': c.to_json()})
        checked += 1
    return _verdict(True, samples=checked)


def pants_family(b: int) -> list[CurveKey]:
    'nested blocks 1..k, k = 2..b-2: a pants decomposition'
    return [block_curve(b, range(1, k + 1)) for k in range(2, b - 1)]


@check('engine', 'complement', 'complement pieces partition the punctures with total Euler characteristic 2 - b')
def _complement(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'complement')
    b = cfg.b
    for _ in range(min(cfg.samples, 20)):
        w = random_word(b, min(cfg.word_length, 6), rng)
        family = apply_all(w, pants_family(b))
        comps = complement_components(family)
        punctures = sorted(p for comp in comps for p in comp.punctures)
        euler = sum(2 - len(comp.punctures) - comp.boundary_count for comp in comps)
        if punctures != list(range(1, b + 1)) or euler != 2 - b or len(comps) != len(family) + 1:
            return CheckResult(FAIL, {'euler': euler}, {'word': w.to_json()})
    return _verdict(True, samples=min(cfg.samples, 20))


# farey


@check('farey', 'edges-in-two-triangles', 'every Farey edge lies in exactly two triangles')
def _two_triangles(cfg: Config) -> CheckResult:
    bad = edge_triangle_violations(cfg.max_den)
    return _verdict(bad == 0, violations=bad, max_den=cfg.max_den)


@check('farey', 'half-twist-adjacent', 'the two half twists of a neighbour are neighbours of both')
def _half_twist_adjacent(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'farey')
    for _ in range(cfg.samples):
        beta = Slope.of(rng.randint(-cfg.max_den, cfg.max_den), rng.randint(0, cfg.max_den) or 1)
        # a neighbour of beta from the extended Euclidean algorithm
        g, x, y = _egcd(beta.p, beta.q)
        alpha = Slope.of(-y, x) if g == 1 else ZERO
        if slope_intersection(alpha, beta) != 2:
            continue
        images = {half_twist_on_slope(beta, k, alpha) for k in (1, -1)}
        if images != set(triangles_on_edge(alpha, beta)):
            return CheckResult(FAIL, {}, {'alpha': str(alpha), 'beta': str(beta)})
    return _verdict(True, samples=cfg.samples)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


@check('farey', 'link-frame', 'a facet link is a Farey graph with the standard frame')
def _link_frame(cfg: Config) -> CheckResult:
    b = max(cfg.b, 5)
    P = standard_facet(b)
    zero = link_as_farey(b, P, block_curve(b, (1, 2)))
    inf = link_as_farey(b, P, block_curve(b, (2, 3)))
    return _verdict(zero == ZERO and inf == INFINITY, zero=str(zero), infinity=str(inf))


# rigid set

RIGID_RANGE = range(5, 11)
LINK_RANGE = range(6, 10)


@check('rigidset', 'vertex-count', 'X_b has one vertex per chord between non-adjacent sides')
def _vertex_count(cfg: Config) -> CheckResult:
    table = {}
    for b in RIGID_RANGE:
        n = build_rigid_set(b).graph.number_of_nodes()
        table[str(b)] = n
        if n != b * (b - 3) // 2:
            return CheckResult(FAIL, {'table': table}, {'b': b})
    pentagon = nx.is_isomorphic(build_rigid_set(5).graph, nx.cycle_graph(5))
    return _verdict(pentagon, table=table, pentagon=pentagon)


@check('rigidset', 'embedding', 'X-adjacency is disjointness and crossing pairs meet twice')
def _embedding(cfg: Config) -> CheckResult:
    for b in RIGID_RANGE:
        bad = embedding_violations(build_rigid_set(b), cfg.threads)
        if bad:
            x, y, i = bad[0]
            return CheckResult(FAIL, {'violations': len(bad)}, {'b': b, 'pair': [list(x), list(y)], 'i': i})
    return _verdict(True, violations=0, b=f'{RIGID_RANGE[0]}..{RIGID_RANGE[-1]}')


@check('rigidset', 'pentagons', 'every crossing pair of X_b has a special pentagon inside X_b')
def _pentagons(cfg: Config) -> CheckResult:
    total = 0
    certificates = {}
    for b in RIGID_RANGE:
        X = build_rigid_set(b)
        pairs = [(x, y) for x, y in itertools.combinations(X.vertices, 2) if X.crossing(x, y)]
        certs = run_parallel(lambda p, X=X: special_pentagon_certificate(X, *p), pairs, cfg.threads)
        for p, c in zip(pairs, certs):
            if c is None:
                return CheckResult(FAIL, {}, {'b': b, 'pair': [list(p[0]), list(p[1])]})
        total += len(pairs)
        certificates[str(b)] = [c.to_json(X) for c in certs]
    return CheckResult(PASS, {'pairs': total}, certificate=certificates)


@check('rigidset', 'minimal-links', 'minimal vertices are the two-blocks and their links are X_(b-1)')
def _minimal_links(cfg: Config) -> CheckResult:
    table = {}
    for b in LINK_RANGE:
        X = build_rigid_set(b)
        found = minimal_vertices(X)
        two_blocks = [v for v in X.vertices if classify(X.curve(v)).minimal]
        table[str(b)] = len(found)
        if sorted(found) != sorted(two_blocks):
            return CheckResult(FAIL, {'table': table}, {'b': b})
    return _verdict(True, minimal=table)


@check('rigidset', 'extension', 'an extension is fixed by the star of a minimal vertex and one curve')
def _extension(cfg: Config) -> CheckResult:
    X = build_rigid_set(7)
    beta = X.vertex_of(block_curve(7, (1, 2)))
    verdict = extension_uniqueness_check(X, beta, block_curve(7, (7, 1)), block_curve(7, (2, 3)), cfg.window)
    return CheckResult(PASS if verdict.ok else FAIL, {'status': verdict.status, 'window': verdict.window})


@check('rigidset', 'completion', 'a power of the half twist about a minimal vertex completes a transported star')
def _completion(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'completion')
    tries = min(cfg.samples, 20)
    for b in (6, 7, 8):
        X = build_rigid_set(b)
        minimal = minimal_vertices(X)
        for _ in range(tries):
            beta = rng.choice(minimal)
            x = X.curve(rng.choice(sorted(v for v in X.vertices if X.crossing(v, beta))))
            w = random_word(b, min(cfg.word_length, 6), rng)
            k = rng.randint(-3, 3)
            alpha = apply_word(w * MappingWord.H(twist_letter(X, beta)) ** k, x)
            copy = complete_star(X, beta, alpha, w)
            if copy is None or alpha not in copy.curves:
                return CheckResult(FAIL, {}, {'b': b, 'beta': list(beta), 'word': w.to_json(), 'power': k})
    return _verdict(True, copies=3 * tries)


@check('rigidset', 'copies', 'copies of X_5 sharing four curves coincide')
def _copies(cfg: Config) -> CheckResult:
    pairs, bad = copy_agreement_check()
    if bad:
        return CheckResult(FAIL, {'pairs': pairs}, {'words': list(bad[0])})
    return _verdict(True, pairs=pairs)


# detectors


@check('detectors', 'heptagon', 'distance-two pairs of the rotated-block heptagon are surrounding pairs')
def _heptagon(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'heptagon')
    std = (block_curve(7, (1, 2, 3)), block_curve(7, (2, 3, 4)))
    length = min(cfg.word_length, 6)
    words = [MappingWord()] + [random_word(7, length, rng) for _ in range(min(cfg.samples, 50))]
    certs = []
    for w in words:
        cert = heptagon_certificate(tuple(apply_word(w, c) for c in std), w)
        bad = cert.violations()
        if bad:
            return CheckResult(FAIL, {'violations': len(bad)}, {'word': w.to_json(), 'first': bad[0]})
        certs.append(cert.to_json())
    return CheckResult(PASS, {'copies': len(words)}, certificate={'heptagons': certs})


@check('detectors', 'octagon', 'two paths of length two in the octagon graph mark a surrounding pair')
def _octagon(cfg: Config) -> CheckResult:
    O = octagon_certificate(8)
    for u, v in itertools.combinations(sorted(O.graph.nodes), 2):
        direct = is_surrounding_pair(O.embedding[u], O.embedding[v]) is not None
        if direct != surrounding_pair_via_O(u, v, O):
            return CheckResult(FAIL, {}, {'pair': [u, v]})
    edges = O.graph.number_of_edges()
    return CheckResult(PASS if edges == 12 else FAIL, {'edges': edges}, certificate=O.to_json())


@check('detectors', 'octagon-transfer', 'a transported octagon keeps its disjointness graph and surrounding pairs')
def _octagon_transfer(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'octagon')
    O = octagon_certificate(8)
    copies = min(cfg.samples, 20)
    for _ in range(copies):
        w = random_word(8, min(cfg.word_length, 6), rng)
        moved = {v: apply_word(w, c) for v, c in O.embedding.items()}
        for u, v in itertools.combinations(sorted(moved), 2):
            disjoint = intersection_number(moved[u], moved[v]) == 0
            surrounding = is_surrounding_pair(moved[u], moved[v]) is not None
            if disjoint != O.graph.has_edge(u, v) or surrounding != surrounding_pair_via_O(u, v, O):
                return CheckResult(FAIL, {}, {'word': w.to_json(), 'pair': [u, v]})
    return _verdict(True, copies=copies)


@check('detectors', 'half-twists', 'the curves specially meeting a crossing pair are its two half twists')
def _half_twists(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'half-twists')
    jobs = []
    for b in (7, 8):
        X = build_rigid_set(b)
        pairs = [(a, m) for m in minimal_vertices(X) for a in X.vertices if X.crossing(a, m)]
        jobs += [(X, a, m) for a, m in rng.sample(pairs, min(len(pairs), min(cfg.samples, 50) // 2))]
    verdicts = run_parallel(lambda job: halftwist_characterization_check(*job), jobs, cfg.threads)
    unresolved = 0
    for (X, a, m), v in zip(jobs, verdicts):
        if v.status == 'no-facet':
            unresolved += 1
        elif not v.ok:
            return CheckResult(FAIL, {}, {'b': X.b, 'pair': [list(a), list(m)], 'verdict': v.to_json()})
    detail = {'pairs': len(jobs), 'no_facet': unresolved}
    return CheckResult(UNRESOLVED if unresolved else PASS, detail)


def division_square(b: int) -> tuple[CurveKey, CurveKey, CurveKey, CurveKey, CurveKey]:
    'alpha+, alpha-, beta+, beta- filling the two sides of delta = block 1..4, for b = 8, 9'
    blk = functools.partial(block_curve, b)
    return blk((1, 2, 3)), blk((5, 6, 7)), blk((2, 3, 4)), blk((b - 2, b - 1, b)), blk((1, 2, 3, 4))


@check('detectors', 'division', 'a filled division determines its strongly separating curve')
def _division(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'division')
    W = cfg.window or 8
    found = []
    # the first copy at b = 9 also collects link witnesses
    first = filled_division(*division_square(9)[:4], W, 1)
    punctured = filled_division(*(block_curve(9, s) for s in ((1, 2, 3), (6, 7, 8), (2, 3, 4), (7, 8, 9))), W, 1)
    if first is None or punctured is not None:
        return CheckResult(FAIL, {'first': first is not None, 'punctured': punctured is not None})
    found.append(first.to_json())
    # words supported on one side of delta give a second filling square
    inside = MappingWord.H(1) * MappingWord.H(3, -1) * MappingWord.H(6)
    for b in (8, 9):
        for k in range(15):
            w = MappingWord() if k == 0 else random_word(b, min(cfg.word_length, 4), rng)
            *square, delta = apply_all(w, division_square(b))
            for u in (MappingWord(), w * inside * w.inverse()):
                d = filled_division(*apply_all(u, square), witnesses=0)
                if d is None or d.delta != delta:
                    return CheckResult(FAIL, {}, {'b': b, 'word': w.to_json(), 'inside': u.to_json()})
                found.append(d.to_json())
    return CheckResult(PASS, {'deltas': 30, 'delta': first.delta.to_json()}, certificate={'divisions': found})


@check('detectors', 'bizarre', 'nested block chains cut out a peripheral seven-holed sphere')
def _bizarre(cfg: Config) -> CheckResult:
    for b in (9, 10):
        chain = [block_curve(b, range(1, k + 1)) for k in range(3, b - 5)]
        comp = bizarre_simplex(chain)
        if len(comp.punctures) != 6:
            return CheckResult(FAIL, {}, {'b': b})
    return _verdict(True)


@check('detectors', 'triple-chain', 'surrounding pairs of one minimal curve are joined by surrounding triples')
def _triple_chain(cfg: Config) -> CheckResult:
    pair1 = (block_curve(7, (1, 2, 3)), block_curve(7, (7, 1, 2)))
    h3 = MappingWord.H(3)
    pair2 = (apply_word(h3, pair1[0]), pair1[1])
    gens = [MappingWord.H(i) for i in range(3, 7)]
    res = triple_chain(pair1, pair2, gens, cfg.chain_depth)
    return CheckResult(PASS if res.status == 'found' else UNRESOLVED, {'status': res.status, 'depth': res.depth})


@check('detectors', 'triple-adjacency', 'pairwise surrounding curves share a minimal curve iff none misses all three')
def _triple_adjacency(cfg: Config) -> CheckResult:
    rng = _rng(cfg, 'triple-adjacency')
    alpha = block_curve(7, (1, 2, 3))
    gamma = apply_word(MappingWord.H(3), alpha)
    triples = [(alpha, block_curve(7, (7, 1, 2)), gamma), (alpha, block_curve(7, (2, 3, 4)), gamma)]
    for _ in range(min(cfg.samples, 10)):
        triples.append(tuple(apply_all(random_word(7, min(cfg.word_length, 4), rng), triples[0])))
    # a fixed window holds block{5,6,7}, the curve missing the second triple
    window = cfg.window or 12
    for t in triples:
        if (is_surrounding_triple(*t) is not None) != surrounding_triple_by_adjacency(*t, window):
            return CheckResult(FAIL, {}, {'triple': [c.to_json() for c in t]})
    return _verdict(True, triples=len(triples))


# supports


@check('supports', 'nu', 'complete support sets have (b-2)/2 members')
def _nu(cfg: Config) -> CheckResult:
    table = {}
    for b in range(7, max(cfg.b, 12) + 1):
        n, _ = enumerate_complete_support_types(b)
        table[str(b)] = n
        if n != (b - 2) // 2 or n != nu_by_compositions(b):
            return CheckResult(FAIL, {'table': table}, {'b': b})
    return _verdict(True, table=table)


@check('supports', 'shapes', 'members of complete support sets are exactly the completable types')
def _shapes(cfg: Config) -> CheckResult:
    for b in range(7, max(cfg.b, 12) + 1):
        if member_types(b) != completable_types(b):
            return CheckResult(FAIL, {}, {'b': b})
    return _verdict(True)


@check('supports', 'classification', 'minimal and unambiguous supports by parity of b')
def _classification(cfg: Config) -> CheckResult:
    for b in range(7, max(cfg.b, 12) + 1):
        for t in member_types(b):
            f = classify_support(t)
            if b % 2 == 0:
                ok = f.minimal and f.unambiguous
            else:
                ok = f.minimal == (f.unambiguous and t.complexity == 1)
            if not ok:
                return CheckResult(FAIL, {}, {'b': b, 'type': str(t), 'flags': f.to_json()})
    return _verdict(True)


@check('supports', 'completions', 'completions agree with a recount through the trees')
def _completions(cfg: Config) -> CheckResult:
    for b in (7, 8):
        for t in member_types(b):
            if completions_of(t) != completions_by_trees(t):
                return CheckResult(FAIL, {}, {'b': b, 'type': str(t)})
    return _verdict(True)


@check('supports', 'realized', 'a realized support type cuts the sphere into a tree of pieces')
def _realized(cfg: Config) -> CheckResult:
    for b in (7, 8):
        for t in sorted(member_types(b)):
            U = Support.realize(t)
            tree = config_tree(b, U.boundary_curves())
            own = any(n.punctures == U.punctures and n.boundary_count == t.d for n in tree.nodes)
            if not (tree.is_tree() and tree.euler_ok() and own):
                return CheckResult(FAIL, {}, {'b': b, 'type': str(t), 'tree': tree.to_json()})
    return _verdict(True)


@check('supports', 'hinges', 'orthogonal terminal supports of S_0,7 fit in one complete support set')
def _hinges(cfg: Config) -> CheckResult:
    U = Support.block(7, (1, 2, 3))
    fits = [k for k in range(1, 7) if hinge_compatible(HingeType(U), HingeType(U.rotate(k)))]
    symmetric = all(
        hinge_compatible(HingeType(U), HingeType(U.rotate(k))) == hinge_compatible(HingeType(U.rotate(k)), HingeType(U))
        for k in range(7)
    )
    witness = U.boundary_curves() + [apply_word(MappingWord.H(6), block_curve(7, (4, 5, 6)))]
    fingerprint = sorted(sorted(T) for T in terminal_fingerprint(U, witness))
    ok = fits == [3, 4] and symmetric and fingerprint == [[4, 5, 7]]
    return _verdict(ok, rotations=str(fits), fingerprint=str(fingerprint))


def checks_of(suite: str) -> list[Check]:
    if suite == 'all':
        return list(REGISTRY)
    return [c for c in REGISTRY if c.suite == suite]


def run_suite(name: str, cfg: Config, only: str = '') -> SuiteReport:
    if name != 'all' and name not in SUITES:
        raise ValueError(f'unknown suite {name}')
    flt = FilterString()
    flt.set(only)
    records = []
    log.info('suite %s: starting', name)
    for c in checks_of(name):
        if not flt.found(c.id):
            continue
        log.debug('check %s', c.id)
        records.append(CheckRecord(c.id, c.anchor, c.func(cfg)))
    report = SuiteReport(name, records, cfg.snapshot())
    log.info('suite %s: %s', name, report.totals)
    return report
