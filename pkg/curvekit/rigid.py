"""
The finite rigid set X_b.

Vertices are chords (i, j), 1 <= i < j <= b, joining non-adjacent sides of a b-gon; side s
stands for segment e_s of the reference frame. The chord (i, j) doubles to the block curve
around punctures i+1..j. Two vertices are adjacent when their chords do not cross.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
from collections.abc import Iterable, Sequence
from functools import lru_cache

import networkx as nx

from . import triangulation as tri
from .curves import (
    CurveKey,
    MappingWord,
    apply_all,
    apply_word,
    block_curve,
    enumerate_curves,
    nested_separations,
    separation,
)
from .engine import intersection_number
from .errors import CurvekitError, UnsupportedError
from .thread_utils import run_parallel

log = logging.getLogger(__name__)

Vertex = tuple[int, int]


class NotCrossingError(CurvekitError):
    pass


def _crossing(x: Vertex, y: Vertex) -> bool:
    (i, j), (k, l) = x, y
    return i < k < j < l or k < i < l < j


@dataclasses.dataclass
class ChordGraph:
    b: int
    graph: nx.Graph
    embedding: dict[Vertex, CurveKey]

    @property
    def vertices(self) -> list[Vertex]:
        return list(self.graph.nodes)

    def curve(self, v: Vertex) -> CurveKey:
        return self.embedding[v]

    def curves(self) -> list[CurveKey]:
        return [self.embedding[v] for v in self.graph.nodes]

    def vertex_of(self, c: CurveKey) -> Vertex | None:
        for v, k in self.embedding.items():
            if k == c:
                return v
        return None

    def disjoint(self, x: Vertex, y: Vertex) -> bool:
        return self.graph.has_edge(x, y)

    def crossing(self, x: Vertex, y: Vertex) -> bool:
        return x != y and not self.graph.has_edge(x, y)

    def link(self, vertices: Iterable[Vertex]) -> set[Vertex]:
        'vertices adjacent to every given vertex'
        vertices = list(vertices)
        out = set(self.graph.nodes)
        for v in vertices:
            out &= set(self.graph.adj[v])
        return out - set(vertices)

    def to_json(self) -> dict:
        return {
            'b': self.b,
            'frame': tri.frame_metadata(self.b),
            'vertices': [{'id': list(v), 'curve': self.embedding[v].to_json()} for v in self.graph.nodes],
            'edges': sorted([list(x), list(y)] for x, y in self.graph.edges),
        }


@lru_cache(maxsize=16)
def _build(b: int) -> ChordGraph:
    vertices = [(i, j) for i, j in itertools.combinations(range(1, b + 1), 2) if 2 <= j - i <= b - 2]
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from((x, y) for x, y in itertools.combinations(vertices, 2) if not _crossing(x, y))
    embedding = {(i, j): block_curve(b, range(i + 1, j + 1)) for i, j in vertices}
    log.debug('X_%d: %d vertices, %d edges', b, g.number_of_nodes(), g.number_of_edges())
    return ChordGraph(b, g, embedding)


def build_rigid_set(b: int) -> ChordGraph:
    if b < 5:
        raise UnsupportedError(f'rigid set needs b >= 5, got {b}')
    return _build(b)


def embedding_violations(X: ChordGraph, threads: int = 1) -> list[tuple[Vertex, Vertex, int]]:
    'pairs where X-adjacency disagrees with i = 0, or a crossing pair has i != 2'
    pairs = list(itertools.combinations(X.vertices, 2))

    def check(pair: tuple[Vertex, Vertex]) -> int:
        return intersection_number(X.curve(pair[0]), X.curve(pair[1]))

    numbers = run_parallel(check, pairs, threads)
    return [(x, y, i) for (x, y), i in zip(pairs, numbers) if i != (0 if X.disjoint(x, y) else 2)]


def minimal_vertices(X: ChordGraph) -> list[Vertex]:
    if X.b == 5:
        return X.vertices
    smaller = build_rigid_set(X.b - 1).graph
    out = [v for v in X.vertices if nx.is_isomorphic(X.graph.subgraph(X.graph.adj[v]), smaller)]
    log.debug('X_%d: %d minimal vertices', X.b, len(out))
    return out


def twist_letter(X: ChordGraph, v: Vertex) -> int:
    'i with H_i the half twist about a minimal vertex'
    s = separation(X.curve(v))
    pair = s.side_a if len(s.side_a) == 2 else s.side_b
    if len(pair) == 2:
        x, y = sorted(pair)
        if tri.cyclic(x + 1, X.b) == y:
            return x
        if tri.cyclic(y + 1, X.b) == x:
            return y
    raise UnsupportedError(f'{v} is not a two-block')


def _cyclic_order(X: ChordGraph, vertices: Iterable[Vertex]) -> list[Vertex]:
    return sorted(vertices, key=lambda v: twist_letter(X, v))


def build_Y(X: ChordGraph) -> list[CurveKey]:  # pylint: disable=invalid-name
    'X_b with both half-twist images about every minimal vertex, first occurrence kept'
    out = dict.fromkeys(X.curves())
    for v in _cyclic_order(X, minimal_vertices(X)):
        k = twist_letter(X, v)
        for sign in (1, -1):
            out.update(dict.fromkeys(c for c in apply_all(MappingWord.H(k, sign), X.curves()) if c not in out))
    log.debug('Y_%d: %d curves', X.b, len(out))
    return list(out)


@dataclasses.dataclass(frozen=True)
class PentagonCertificate:
    'closed chain (alpha, epsilon, beta, gamma, delta) in the link of R'

    pentagon: tuple[Vertex, Vertex, Vertex, Vertex, Vertex]
    R: tuple[Vertex, ...]

    def to_json(self, X: ChordGraph) -> dict:
        return {'pentagon': [X.curve(v).to_json() for v in self.pentagon], 'R': [X.curve(v).to_json() for v in self.R]}


def simplices(X: ChordGraph, pool: Iterable[Vertex], size: int) -> Iterable[tuple[Vertex, ...]]:
    if size == 0:
        yield ()
        return
    sub = X.graph.subgraph(pool)
    for clique in nx.enumerate_all_cliques(sub):
        if len(clique) == size:
            yield tuple(sorted(clique))
        elif len(clique) > size:
            return


def special_pentagon_certificate(X: ChordGraph, alpha: Vertex, beta: Vertex) -> PentagonCertificate | None:
    if not X.crossing(alpha, beta):
        raise NotCrossingError(f'{alpha} and {beta} do not cross')
    for R in simplices(X, sorted(X.link([alpha, beta])), X.b - 5):
        L = sorted(X.link(R) - {alpha, beta}) if R else sorted(set(X.vertices) - {alpha, beta})
        for eps in L:
            if not (X.disjoint(eps, alpha) and X.disjoint(eps, beta)):
                continue
            for gamma in L:
                if not (X.disjoint(gamma, beta) and X.crossing(gamma, alpha) and X.crossing(gamma, eps)):
                    continue
                for delta in L:
                    if (
                        X.disjoint(delta, gamma)
                        and X.disjoint(delta, alpha)
                        and X.crossing(delta, beta)
                        and X.crossing(delta, eps)
                    ):
                        return PentagonCertificate((alpha, eps, beta, gamma, delta), R)
    return None


@dataclasses.dataclass(frozen=True)
class ExtensionVerdict:
    status: str  # unique, distinct, counterexample, no-facet
    facet: tuple[CurveKey, ...]
    candidates: tuple[CurveKey, ...]
    window: int

    @property
    def ok(self) -> bool:
        return self.status in ('unique', 'distinct')

    def to_json(self) -> dict:
        return {
            'status': self.status,
            'facet': [c.to_json() for c in self.facet],
            'candidates': [c.to_json() for c in self.candidates],
            'window': self.window,
        }


def default_window(X: ChordGraph) -> int:
    return max(c.weight for c in X.curves()) + 4


def _disjoint(a: CurveKey, c: CurveKey) -> bool:
    return a != c and nested_separations(separation(a), separation(c)) and intersection_number(a, c) == 0


def _find_facet(X: ChordGraph, beta: Vertex, alpha: CurveKey, z: CurveKey) -> tuple[CurveKey, ...] | None:
    'R + {x} in the link of beta: R misses alpha and z, x misses z and crosses alpha'
    star = sorted(X.link([beta]))
    xs = [x for x in star if _disjoint(X.curve(x), z) and not _disjoint(X.curve(x), alpha)]
    rs = [r for r in star if _disjoint(X.curve(r), z) and _disjoint(X.curve(r), alpha)]
    for x in xs:
        for R in simplices(X, [r for r in rs if X.disjoint(r, x)], X.b - 5):
            return tuple(X.curve(v) for v in R + (x,))
    return None


def extension_uniqueness_check(
    X: ChordGraph, beta: Vertex, alpha: CurveKey, z: CurveKey, window: int | None = None
) -> ExtensionVerdict:
    'is z the only curve of the window missing the facet and alpha'
    W = window or default_window(X)
    P = _find_facet(X, beta, alpha, z)
    if P is None:
        return ExtensionVerdict('no-facet', (), (), W)
    pool = dict.fromkeys(itertools.chain(X.curves(), enumerate_curves(X.b, W)))
    candidates = tuple(c for c in pool if c not in P and c != alpha and all(_disjoint(c, x) for x in P + (alpha,)))
    log.debug('extension check: %d window curves, %d candidates', len(pool), len(candidates))
    if len(candidates) != 1:
        status = 'counterexample'
    elif candidates[0] == z:
        status = 'unique'
    else:
        status = 'distinct'
    return ExtensionVerdict(status, P, candidates, W)


@dataclasses.dataclass(frozen=True)
class CompletedCopy:
    'the copy word(X_b); word = transporter * H_beta^power'

    word: MappingWord
    power: int
    curves: tuple[CurveKey, ...]

    def to_json(self) -> dict:
        return {'word': self.word.to_json(), 'power': self.power, 'curves': [c.to_json() for c in self.curves]}


def complete_star(
    X: ChordGraph, beta: Vertex, alpha: CurveKey, transporter: MappingWord = MappingWord(), span: int = 6
) -> CompletedCopy | None:
    'copy of X_b containing transporter(star of beta) and alpha, from a power of the half twist about beta'
    if beta not in minimal_vertices(X):
        raise UnsupportedError(f'{beta} is not a minimal vertex of X_{X.b}')
    h = MappingWord.H(twist_letter(X, beta))
    if intersection_number(alpha, apply_word(transporter, X.curve(beta))) == 0:
        raise NotCrossingError('alpha misses beta')
    crossing = [X.curve(v) for v in X.vertices if X.crossing(v, beta)]
    for k in sorted(range(-span, span + 1), key=lambda k: (abs(k), k)):
        word = transporter * h**k
        if alpha in apply_all(word, crossing):
            return CompletedCopy(word, k, tuple(apply_all(word, X.curves())))
    log.debug('no power of H_%s up to %d carries X_%d onto %s', beta, span, X.b, list(alpha.word))
    return None


def copy_agreement_check(words: Sequence[MappingWord] | None = None) -> tuple[int, list[tuple[str, str]]]:
    'images of X_5 sharing four curves coincide; returns (pairs checked, violations)'
    X = build_rigid_set(5)
    if words is None:
        letters = [MappingWord.H(i, s) for i in range(1, 6) for s in (1, -1)]
        words = [MappingWord()] + letters + [u * v for u in letters for v in letters]
    copies: dict[frozenset[CurveKey], MappingWord] = {}
    for w in words:
        copies.setdefault(frozenset(apply_word(w, c) for c in X.curves()), w)
    violations = []
    pairs = 0
    for (c1, w1), (c2, w2) in itertools.combinations(copies.items(), 2):
        pairs += 1
        if len(c1 & c2) >= 4:
            violations.append((str(w1), str(w2)))
    log.debug('X_5 copies: %d distinct, %d pairs', len(copies), pairs)
    return pairs, violations
