from __future__ import annotations

import dataclasses
import logging
from collections.abc import Iterator, Sequence
from math import gcd

import networkx as nx

from .curves import CurveKey, MappingWord, NotInLinkError, apply_word, block_curve
from .engine import complement_structure, intersection_number, resolve
from .errors import CurvekitError

log = logging.getLogger(__name__)


class NotAnEdgeError(CurvekitError):
    pass


class BadSideError(CurvekitError):
    pass


class FrameRequiredError(CurvekitError):
    pass


@dataclasses.dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if gcd(self.p, self.q) != 1 or self.q < 0 or (self.q == 0 and self.p != 1):
            raise ValueError(f'non-canonical slope {self.p}/{self.q}')

    @classmethod
    def of(cls, p: int, q: int) -> Slope:
        g = gcd(p, q)
        if not g:
            raise ValueError('0/0 is not a slope')
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    def __str__(self):
        return f'{self.p}/{self.q}'

    def to_json(self) -> str:
        return str(self)


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)
ONE = Slope(1, 1)

Triangle = tuple[Slope, Slope, Slope]


def det(s: Slope, t: Slope) -> int:
    return s.p * t.q - s.q * t.p


def slope_intersection(s: Slope, t: Slope) -> int:
    return 2 * abs(det(s, t))


def triangles_on_edge(s: Slope, t: Slope) -> tuple[Slope, Slope]:
    if slope_intersection(s, t) != 2:
        raise NotAnEdgeError(f'{s} and {t} are not Farey neighbours')
    return (Slope.of(s.p + t.p, s.q + t.q), Slope.of(s.p - t.p, s.q - t.q))


def check_triangle(t: Sequence[Slope]):
    if len(t) != 3 or len(set(t)) != 3:
        raise NotAnEdgeError(f'not a triangle: {[str(s) for s in t]}')
    for i in range(3):
        if slope_intersection(t[i], t[(i + 1) % 3]) != 2:
            raise NotAnEdgeError(f'not a triangle: {[str(s) for s in t]}')


def reflect(t: Triangle, side: int) -> Triangle:
    'replace vertex `side` by the other triangle on the opposite edge'
    if side not in (0, 1, 2):
        raise BadSideError(f'side index {side} not in 0..2')
    u, v = (t[j] for j in range(3) if j != side)
    m1, m2 = triangles_on_edge(u, v)
    new = m2 if m1 == t[side] else m1
    out = list(t)
    out[side] = new
    return (out[0], out[1], out[2])


def triangle_walk(start: Triangle, reflections: Sequence[int]) -> Triangle:
    check_triangle(start)
    t = start
    for side in reflections:
        t = reflect(t, side)
    return t


def half_twist_on_slope(beta: Slope, k: int, alpha: Slope) -> Slope:
    'k-th power of the half twist about beta'
    d = k * det(beta, alpha)
    return Slope.of(alpha.p + d * beta.p, alpha.q + d * beta.q)


def farey_graph(max_den: int) -> nx.Graph:
    'slopes with |p|, q <= max_den; edges join neighbours'
    g = nx.Graph()
    slopes = sorted(
        {Slope.of(p, q) for p in range(-max_den, max_den + 1) for q in range(0, max_den + 1) if (p, q) != (0, 0)}
    )
    g.add_nodes_from(slopes)
    for i, s in enumerate(slopes):
        for t in slopes[i + 1 :]:
            if abs(det(s, t)) == 1:
                g.add_edge(s, t)
    return g


def edge_triangle_violations(max_den: int) -> int:
    'edges whose common neighbours within the window are not exactly their two mediants'
    g = farey_graph(max_den)
    bad = 0
    for s, t in g.edges:
        mediants = set(triangles_on_edge(s, t))
        common = set(nx.common_neighbors(g, s, t))
        if len(mediants) != 2 or not common <= mediants or common != {m for m in mediants if m in g}:
            bad += 1
    log.debug('farey window %d: %d edges, %d violations', max_den, g.number_of_edges(), bad)
    return bad


def farey_ball(center: Slope, radius: int, max_den: int) -> nx.Graph:
    return nx.ego_graph(farey_graph(max_den), center, radius=radius)


# links of facets


@dataclasses.dataclass(frozen=True)
class Frame:
    'curves of a facet link sent to 0/1, 1/0 and 1/1'

    zero: CurveKey
    infinity: CurveKey
    one: CurveKey

    def to_json(self) -> dict:
        return {'0/1': self.zero.to_json(), '1/0': self.infinity.to_json(), '1/1': self.one.to_json()}


def _check_link(P: Sequence[CurveKey], c: CurveKey):
    if c in P or any(intersection_number(c, x) for x in P):
        raise NotInLinkError('curve is not in the link of the facet')


def four_holes(b: int, P: Sequence[CurveKey]) -> list[frozenset[int]]:
    'puncture sets behind the four holes of the complexity-one component of a facet'
    comps, edges = complement_structure(list(P))
    four = [i for i, comp in enumerate(comps) if comp.complexity == 1]
    if len(four) != 1:
        raise FrameRequiredError('multicurve is not a facet')
    f = four[0]
    holes = [frozenset({j}) for j in comps[f].punctures]
    adj: dict[int, list[int]] = {}
    for x, y, _ in edges:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    for start in adj.get(f, []):
        # everything reachable from this neighbour without entering f
        seen, stack = {start}, [start]
        while stack:
            u = stack.pop()
            for v in adj.get(u, []):
                if v != f and v not in seen:
                    seen.add(v)
                    stack.append(v)
        holes.append(frozenset().union(*(comps[u].punctures for u in seen)))
    if len(holes) != 4:
        raise FrameRequiredError('facet component does not have four holes')

    def first(h: frozenset[int]) -> int:
        # least puncture that starts the cyclic run of h
        starts = [j for j in h if ((j - 2) % b) + 1 not in h]
        return min(starts) if starts else min(h)

    return sorted(holes, key=lambda h: (1 not in h, first(h)))


def default_frame(b: int, P: Sequence[CurveKey]) -> Frame:
    h = four_holes(b, P)
    try:
        zero = block_curve(b, h[0] | h[1])
        infinity = block_curve(b, h[1] | h[2])
    except CurvekitError as e:
        raise FrameRequiredError('holes are not cyclic intervals; pass a frame') from e
    ones = resolve(zero, infinity, flip=False)
    if len(ones) != 1:
        raise FrameRequiredError('could not place 1/1')
    return Frame(zero, infinity, ones[0])


def link_as_farey(b: int, P: Sequence[CurveKey], c: CurveKey, frame: Frame | None = None) -> Slope:
    P = list(P)
    _check_link(P, c)
    if frame is None:
        frame = default_frame(b, P)
    p = intersection_number(c, frame.zero) // 2
    q = intersection_number(c, frame.infinity) // 2
    if p and q:
        one = intersection_number(c, frame.one) // 2
        if one == abs(p - q):
            pass
        elif one == p + q:
            p = -p
        else:
            raise FrameRequiredError(f'curve does not fit the frame ({p}, {q}, {one})')
    return Slope.of(p, q)


def transport_frame(frame: Frame, w: MappingWord) -> Frame:
    return Frame(apply_word(w, frame.zero), apply_word(w, frame.infinity), apply_word(w, frame.one))


def common_neighbours(u: CurveKey, v: CurveKey) -> tuple[CurveKey, ...]:
    'the two link curves meeting both u and v twice (i(u, v) = 2)'
    out = []
    for flip in (False, True):
        for k in resolve(u, v, flip):
            if k not in out and intersection_number(k, u) == 2 and intersection_number(k, v) == 2:
                out.append(k)
    return tuple(out)


def _link_layers(frame: Frame) -> Iterator[dict[CurveKey, None]]:
    'curves of the facet link found after 0, 1, 2, ... rounds of reflecting the frame triangle'
    start = (frame.zero, frame.infinity, frame.one)
    found = {c: None for c in start}
    seen = {frozenset(start)}
    layer = [start]
    yield found
    while layer:
        nxt = []
        for t in layer:
            for side in range(3):
                u, v = (t[j] for j in range(3) if j != side)
                new = [k for k in common_neighbours(u, v) if k != t[side]]
                if not new:
                    continue
                tri_ = tuple(new[0] if j == side else t[j] for j in range(3))
                key = frozenset(tri_)
                if key in seen:
                    continue
                seen.add(key)
                found.setdefault(new[0], None)
                nxt.append(tri_)
        layer = nxt
        yield found


def link_window(b: int, P: Sequence[CurveKey], radius: int, frame: Frame | None = None) -> dict[Slope, CurveKey]:
    'curves of the facet link reached from the frame triangle by at most `radius` reflections'
    P = list(P)
    if frame is None:
        frame = default_frame(b, P)
    found: dict[CurveKey, None] = {}
    for r, found in enumerate(_link_layers(frame)):
        if r == radius:
            break
    out = {link_as_farey(b, P, c, frame): c for c in found}
    log.debug('link window b=%d radius=%d: %d curves', b, radius, len(out))
    return dict(sorted(out.items()))


def link_window_around(
    b: int, P: Sequence[CurveKey], curves: Sequence[CurveKey], limit: int = 12, frame: Frame | None = None
) -> dict[Slope, CurveKey] | None:
    'grow the window until it holds every given curve, then one round more; None past `limit` rounds'
    P = list(P)
    if frame is None:
        frame = default_frame(b, P)
    layers = _link_layers(frame)
    for _ in range(limit):
        found = next(layers)
        if all(c in found for c in curves):
            found = next(layers)
            return dict(sorted((link_as_farey(b, P, c, frame), c) for c in found))
    return None
