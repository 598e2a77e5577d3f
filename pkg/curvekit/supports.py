"""
Supports of S_{0,b} at the level of topological types.

A support is a connected subsurface of complexity >= 1. Cutting the sphere along the boundary
curves of pairwise disjoint supports leaves a tree whose nodes are the supports and the leftover
pairs of pants ("fillers"); a complete support set has the largest possible number nu(b) of
supports. A support U has type (p; q_1..q_d): p punctures of its own and d complementary disks
holding q_j >= 2 punctures each.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence
from functools import lru_cache

import networkx as nx

from . import triangulation as tri
from .curves import CurveKey, block_curve, classify, enumerate_curves, separation
from .engine import ComplementComponent, complement_structure, filled_subsurface, intersection_number
from .errors import CurvekitError, UnsupportedError

log = logging.getLogger(__name__)

SUPPORT = 'S'
FILLER = 'F'

# (kind, own punctures, children)
Node = tuple[str, int, tuple]


def nu(b: int) -> int:
    return (b - 2) // 2


def mu(q: int) -> int:
    'most disjoint supports inside a disk holding q punctures'
    return (q - 1) // 2


@dataclasses.dataclass(frozen=True, order=True)
class SupportType:
    p: int
    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'q', tuple(sorted(self.q, reverse=True)))
        if self.p < 0 or any(x < 2 for x in self.q):
            raise UnsupportedError(f'bad support type {self}')

    @property
    def b(self) -> int:
        return self.p + sum(self.q)

    @property
    def d(self) -> int:
        return len(self.q)

    @property
    def complexity(self) -> int:
        return self.p + self.d - 3

    @property
    def completable(self) -> bool:
        return self.complexity >= 1 and 1 + sum(mu(x) for x in self.q) == nu(self.b)

    @property
    def terminal(self) -> bool:
        return self.complexity == 1 and self.d == 1

    def __str__(self):
        return f'{self.p}|' + ','.join(map(str, self.q))

    def to_json(self) -> str:
        return str(self)


# configuration trees of a multicurve


@dataclasses.dataclass
class ConfigurationTree:
    b: int
    nodes: list  # ComplementComponent
    edges: list[tuple[int, int, int]]

    @property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.nodes)))
        g.add_edges_from((x, y, {'curve': c}) for x, y, c in self.edges)
        return g

    def euler_ok(self) -> bool:
        return sum(2 - len(n.punctures) - n.boundary_count for n in self.nodes) == 2 - self.b

    def is_tree(self) -> bool:
        return nx.is_tree(self.graph)

    def to_json(self) -> dict:
        return {'b': self.b, 'nodes': [n.to_json() for n in self.nodes], 'edges': [list(e) for e in self.edges]}


def config_tree(b: int, curves: Sequence[CurveKey]) -> ConfigurationTree:
    if not curves:
        return ConfigurationTree(b, [ComplementComponent(frozenset(range(1, b + 1)), 0)], [])
    comps, edges = complement_structure(list(curves))
    return ConfigurationTree(b, comps, edges)


# type-level enumeration


def _partitions(n: int, smallest: int = 2) -> Iterator[tuple[int, ...]]:
    'non-increasing parts >= smallest'
    if n == 0:
        yield ()
        return
    for first in range(n, smallest - 1, -1):
        for rest in _partitions(n - first, smallest):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def _children(parts: tuple[int, ...], filler_ok: bool) -> Iterator[tuple[Node, ...]]:
    groups = [(v, len(list(g))) for v, g in itertools.groupby(parts)]
    choices = [list(itertools.combinations_with_replacement(_rooted(v, filler_ok), r)) for v, r in groups]
    for combo in itertools.product(*choices):
        yield tuple(sorted(itertools.chain.from_iterable(combo)))


@lru_cache(maxsize=None)
def _rooted(q: int, filler_ok: bool) -> tuple[Node, ...]:
    'subtrees hanging off one edge, holding q punctures'
    out = []
    for p in range(q + 1):
        for parts in _partitions(q - p):
            d = len(parts) + 1
            kinds = [SUPPORT] if p + d >= 4 else []
            if filler_ok and p + d == 3:
                kinds.append(FILLER)
            for kind in kinds:
                for children in _children(parts, kind == SUPPORT):
                    out.append((kind, p, children))
    return tuple(out)


def _size(node: Node) -> int:
    return node[1] + sum(_size(c) for c in node[2])


def _supports(node: Node) -> int:
    return (node[0] == SUPPORT) + sum(_supports(c) for c in node[2])


def _encode(node: Node) -> str:
    return node[0] + str(node[1]) + '(' + ','.join(sorted(_encode(c) for c in node[2])) + ')'


def _trees(b: int) -> Iterator[Node]:
    'configuration trees rooted at a support'
    for p in range(b + 1):
        for parts in _partitions(b - p):
            if p + len(parts) >= 4:
                for children in _children(parts, True):
                    yield (SUPPORT, p, children)


def _types_in(node: Node, b: int, parent: int | None = None) -> Iterator[SupportType]:
    if node[0] == SUPPORT:
        q = [_size(c) for c in node[2]]
        if parent is not None:
            q.append(b - _size(node))
        yield SupportType(node[1], tuple(q))
    for c in node[2]:
        yield from _types_in(c, b, 0)


@lru_cache(maxsize=16)
def _complete(b: int) -> tuple[int, tuple[Node, ...]]:
    best, trees = 0, []
    for t in _trees(b):
        m = _supports(t)
        if m > best:
            best, trees = m, [t]
        elif m == best:
            trees.append(t)
    log.debug('b=%d: nu=%d over %d maximal trees', b, best, len(trees))
    return best, tuple(trees)


def enumerate_complete_support_types(b: int) -> tuple[int, set[tuple[SupportType, ...]]]:
    if b < 7:
        raise UnsupportedError(f'support census needs b >= 7, got {b}')
    n, trees = _complete(b)
    return n, {tuple(sorted(_types_in(t, b))) for t in trees}


def member_types(b: int) -> set[SupportType]:
    _, families = enumerate_complete_support_types(b)
    return {t for f in families for t in f}


def completable_types(b: int) -> set[SupportType]:
    'every type whose disks leave room for nu - 1 more supports'
    out = set()
    for p in range(b + 1):
        for q in _partitions(b - p):
            t = SupportType(p, q)
            if t.completable:
                out.add(t)
    return out


def nu_by_compositions(b: int) -> int:
    'largest m with puncture and degree counts of m supports and some fillers forming a tree'
    best = 0
    m = 1
    while True:
        feasible = False
        for f in range(0, max(b - 2 - 2 * m, -1) + 1):
            n = m + f
            if n == 1:
                feasible = feasible or b >= 4
                continue
            for degrees in _degree_sequences(n, 2 * (n - 1)):
                if any(d > 3 for d in degrees[m:]):
                    continue
                need = sum(max(0, 4 - d) for d in degrees[:m]) + sum(3 - d for d in degrees[m:])
                if need <= b:
                    feasible = True
                    break
            if feasible:
                break
        if not feasible:
            return best
        best = m
        m += 1


def _degree_sequences(n: int, total: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - n + 2):
        for rest in _degree_sequences(n - 1, total - first):
            yield (first,) + rest


# completions


Completion = tuple[tuple[int, str], ...]


def completions_of(U: SupportType) -> frozenset[Completion]:
    'maximal families inside the complementary disks, by disk size and rooted shape'
    if not U.completable:
        return frozenset()
    per_disk = []
    for q in U.q:
        if mu(q) >= 1:
            per_disk.append([(q, _encode(t)) for t in _rooted(q, True) if _supports(t) == mu(q)])
    return frozenset(tuple(sorted(c)) for c in itertools.product(*per_disk))


def _as_graph(root: Node) -> nx.Graph:
    g = nx.Graph()

    def add(node: Node) -> int:
        i = g.number_of_nodes()
        g.add_node(i, kind=node[0], p=node[1])
        for c in node[2]:
            g.add_edge(i, add(c))
        return i

    add(root)
    return g


def _branch(g: nx.Graph, v: int, parent: int) -> tuple[int, str]:
    'size and encoding of the side of edge (parent, v) containing v, rooted at v'
    sizes, codes = [], []
    for w in g.adj[v]:
        if w != parent:
            s, c = _branch(g, w, v)
            sizes.append(s)
            codes.append(c)
    node = g.nodes[v]
    return node['p'] + sum(sizes), node['kind'] + str(node['p']) + '(' + ','.join(sorted(codes)) + ')'


def completions_by_trees(U: SupportType) -> frozenset[Completion]:
    'completions of U read off every maximal tree it occurs in'
    b = U.b
    _, trees = _complete(b)
    out = set()
    for t in trees:
        g = _as_graph(t)
        for v, data in g.nodes(data=True):
            if data['kind'] != SUPPORT:
                continue
            branches = [_branch(g, w, v) for w in g.adj[v]]
            if SupportType(data['p'], tuple(s for s, _ in branches)) != U:
                continue
            out.add(tuple(sorted((s, c) for s, c in branches if mu(s) >= 1)))
    return frozenset(out)


@dataclasses.dataclass(frozen=True)
class SupportFlags:
    minimal: bool
    unambiguous: bool
    terminal: bool

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def _cuts(U: SupportType) -> Iterator[tuple[SupportType, tuple[int, tuple[int, ...]]]]:
    'supports left after cutting one pair of pants off U, with what the pants glues: own punctures and disk sizes'
    if U.complexity < 2:
        return
    q = list(U.q)
    if U.p >= 2:
        yield SupportType(U.p - 2, U.q + (2,)), (2, ())
    for n in sorted(set(q)):
        rest = list(q)
        rest.remove(n)
        if U.p >= 1:
            yield SupportType(U.p - 1, tuple(rest) + (n + 1,)), (1, (n,))
        for m in sorted(set(rest)):
            if m <= n:
                others = list(rest)
                others.remove(m)
                yield SupportType(U.p, tuple(others) + (n + m,)), (0, (n, m))


def _extensions(T: SupportType) -> Iterator[tuple[SupportType, tuple[int, tuple[int, ...]]]]:
    'supports W with T among the cuts of W'
    for n in sorted(set(T.q)):
        rest = list(T.q)
        rest.remove(n)
        if n == 2:
            yield SupportType(T.p + 2, tuple(rest)), (2, ())
        if n >= 3:
            yield SupportType(T.p + 1, tuple(rest) + (n - 1,)), (1, (n - 1,))
        for m in range(2, n // 2 + 1):
            yield SupportType(T.p, tuple(rest) + (n - m, m)), (0, (n - m, m))


def _entries(c: Completion, q: int) -> Iterator[tuple[str, Completion]]:
    'shape of one disk of size q in c and the rest of c'
    if mu(q) == 0:
        yield _encode((FILLER, q, ())), c
        return
    seen = set()
    for i, (size, code) in enumerate(c):
        if size == q and code not in seen:
            seen.add(code)
            yield code, c[:i] + c[i + 1 :]


def _glued(completions: Iterable[Completion], own: int, disks: tuple[int, ...]) -> set[Completion]:
    'completions seen from the support without the pants: the pants becomes the root of a new disk'
    out = set()
    for c in completions:
        if not disks:
            out.add(c)
        elif len(disks) == 1:
            for code, rest in _entries(c, disks[0]):
                out.add(tuple(sorted(rest + ((disks[0] + own, _glue(own, [code])),))))
        else:
            for c1, r1 in _entries(c, disks[0]):
                for c2, r2 in _entries(r1, disks[1]):
                    out.add(tuple(sorted(r2 + ((sum(disks), _glue(0, [c1, c2])),))))
    return out


def _glue(own: int, codes: Sequence[str]) -> str:
    return FILLER + str(own) + '(' + ','.join(sorted(codes)) + ')'


def completions_maximal(U: SupportType) -> bool:
    'no support has strictly more completions than U'
    if not U.completable:
        return False
    # walk through nested supports with the same completions; a strictly larger set shows up one cut further
    seen, todo = {U}, [U]
    while todo:
        T = todo.pop()
        own = completions_of(T)
        for V, (k, disks) in _cuts(T):
            image, theirs = _glued(own, k, disks), completions_of(V)
            if image < theirs:
                log.debug('%s: completions grow from %s to %s', U, T, V)
                return False
            if image == theirs and V not in seen:
                seen.add(V)
                todo.append(V)
        for W, (k, disks) in _extensions(T):
            if W not in seen and _glued(completions_of(W), k, disks) == own:
                seen.add(W)
                todo.append(W)
    return True


def _equally_completable(U: SupportType) -> Iterator[SupportType]:
    'other supports differing from U by a pair of pants'
    pants = [i for i, q in enumerate(U.q) if q == 2]
    if pants:
        rest = list(U.q)
        del rest[pants[0]]
        yield SupportType(U.p + 2, tuple(rest))
    if U.p >= 2 and U.complexity >= 2:
        yield SupportType(U.p - 2, U.q + (2,))


def classify_support(U: SupportType) -> SupportFlags:
    own = completions_of(U)
    minimal = completions_maximal(U)
    unambiguous = U.completable and not any(completions_of(V) == own for V in _equally_completable(U))
    return SupportFlags(minimal, unambiguous, U.terminal)


# labelled supports


@dataclasses.dataclass(frozen=True)
class Support:
    b: int
    punctures: frozenset[int]
    outer: tuple[frozenset[int], ...]

    def __post_init__(self):
        outer = tuple(sorted((frozenset(o) for o in self.outer), key=sorted))
        object.__setattr__(self, 'punctures', frozenset(self.punctures))
        object.__setattr__(self, 'outer', outer)
        everything = set(self.punctures).union(*outer) if outer else set(self.punctures)
        total = len(self.punctures) + sum(len(o) for o in outer)
        if everything != set(range(1, self.b + 1)) or total != self.b:
            raise UnsupportedError('support does not partition the punctures')
        if self.type.complexity < 1:
            raise UnsupportedError(f'support of complexity {self.type.complexity}')

    @property
    def type(self) -> SupportType:
        return SupportType(len(self.punctures), tuple(len(o) for o in self.outer))

    @classmethod
    def block(cls, b: int, interval: Iterable[int]) -> Support:
        'the support cut out by one block curve, on the side of the interval'
        I = frozenset(tri.cyclic(i, b) for i in interval)
        return cls(b, I, (frozenset(range(1, b + 1)) - I,))

    @classmethod
    def realize(cls, t: SupportType, start: int = 1) -> Support:
        'own punctures first, then each disk as a run of consecutive punctures'
        b = t.b
        labels = [tri.cyclic(start + k, b) for k in range(b)]
        own, pos = frozenset(labels[: t.p]), t.p
        outer = []
        for q in t.q:
            outer.append(frozenset(labels[pos : pos + q]))
            pos += q
        return cls(b, own, tuple(outer))

    def boundary_curves(self) -> list[CurveKey]:
        return [block_curve(self.b, o) for o in self.outer]

    def rotate(self, k: int) -> Support:
        def move(s: frozenset[int]) -> frozenset[int]:
            return frozenset(tri.cyclic(i + k, self.b) for i in s)

        return Support(self.b, move(self.punctures), tuple(move(o) for o in self.outer))

    def disjoint_slots(self, other: Support) -> tuple[int, int] | None:
        'j, k with self inside disk k of other and other inside disk j of self'
        everything = frozenset(range(1, self.b + 1))
        for j, o in enumerate(self.outer):
            for k, o2 in enumerate(other.outer):
                if everything - o <= o2:
                    return j, k
        return None

    def to_json(self) -> dict:
        return {'b': self.b, 'punctures': sorted(self.punctures), 'outer': [sorted(o) for o in self.outer]}


@dataclasses.dataclass(frozen=True)
class HingeType:
    support: Support
    marker: int = 0


def hinge_compatible(h1: HingeType, h2: HingeType) -> bool:
    'orthogonal supports lying in a common complete support set'
    U, V = h1.support, h2.support
    if U == V or U.b != V.b:
        return False
    slots = U.disjoint_slots(V)
    if slots is None:
        return False
    j, k = slots
    between = len(U.outer[j] & V.outer[k])
    count = 2 + sum(mu(len(o)) for i, o in enumerate(U.outer) if i != j)
    count += sum(mu(len(o)) for i, o in enumerate(V.outer) if i != k)
    return count + between // 2 == nu(U.b)


class WitnessMismatchError(CurvekitError):
    pass


def terminal_fingerprint(U: Support, witness: Sequence[CurveKey]) -> frozenset[frozenset[int]]:
    'punctures of the terminal components of a witness multicurve cutting out U, other than U'
    tree = config_tree(U.b, witness)
    if not any(n.punctures == U.punctures and n.boundary_count == U.type.d for n in tree.nodes):
        raise WitnessMismatchError(f'{sorted(U.punctures)} is not cut out by the witness')
    terminal = (n for n in tree.nodes if n.boundary_count == 1 and n.complexity == 1)
    return frozenset(n.punctures for n in terminal if n.punctures != U.punctures)


def filling_pair_in(b: int, region: Iterable[int], window: int = 12) -> tuple[CurveKey, CurveKey] | None:
    'two one-separating curves inside the disk of a region whose union fills it'
    region = frozenset(region)
    pool = []
    for c in enumerate_curves(b, window):
        if not classify(c).one_separating:
            continue
        if any(len(x) == 3 and x <= region for x in separation(c).blocks):
            pool.append(c)
    log.debug('filling pair search in %s: %d candidates', sorted(region), len(pool))
    outside = frozenset(range(1, b + 1)) - region
    for x, y in itertools.combinations(pool, 2):
        if intersection_number(x, y) < 4:
            continue
        fs = filled_subsurface(x, y)
        if fs.component.punctures == region and [set(s.blocks) for s in map(separation, fs.boundary)] == [
            {region, outside}
        ]:
            return x, y
    return None


def census(b: int) -> list[dict]:
    'one row per completable support type'
    n, families = enumerate_complete_support_types(b)
    members = {t for f in families for t in f}
    rows = []
    for t in sorted(members):
        flags = classify_support(t)
        rows.append(
            {
                'b': b,
                'nu': n,
                'type': str(t),
                'complexity': t.complexity,
                'completions': len(completions_of(t)),
                **flags.to_json(),
            }
        )
    return rows
