"""
Exact realization of multicurves.

A configuration keeps every curve as its cyclic segment word plus, for each
segment, the order of all curve points along it. Arcs are chords of the disks
U and L; two arcs of one disk cross iff their end points interleave along the
axis circle. Everything else (crossing order along an arc, rotation at a
crossing) comes from placing the points of a disk on a parabola, with exact
rationals.
"""

from __future__ import annotations

import dataclasses
import json
import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm

from . import triangulation as tri
from .curves import CurveKey
from .errors import CurvekitError, InessentialCurveError, MalformedKeyError

log = logging.getLogger(__name__)

Point = tuple[int, int]  # (curve index, index in the curve word)
Chord = tuple[Point, Point]

LOWER, UPPER = tri.LOWER, tri.UPPER


class DegeneracyError(CurvekitError):
    pass


class NotAMulticurveError(CurvekitError):
    pass


class NotFillingError(CurvekitError):
    pass


class SingleCurveExpectedError(CurvekitError):
    pass


def other_disk(disk: str) -> str:
    return UPPER if disk == LOWER else LOWER


@dataclasses.dataclass(frozen=True)
class PLConfiguration:
    b: int
    words: tuple[tuple[int, ...], ...]
    order: tuple[tuple[Point, ...], ...]  # order[s - 1]: points on e_s in axis direction

    def seg(self, p: Point) -> int:
        return self.words[p[0]][p[1]]

    def partner(self, disk: str, p: Point) -> Point:
        c, k = p
        m = len(self.words[c])
        if (disk == LOWER) == (k % 2 == 0):
            return (c, (k + 1) % m)
        return (c, (k - 1) % m)

    @cached_property
    def pos(self) -> dict[Point, int]:
        out = {}
        for points in self.order:
            for p in points:
                out[p] = len(out)
        return out

    @cached_property
    def index(self) -> dict[Point, int]:
        'index of a point inside its segment'
        return {p: j for points in self.order for j, p in enumerate(points)}

    def chords(self, disk: str) -> list[Chord]:
        out = []
        first = 0 if disk == LOWER else 1
        for c, word in enumerate(self.words):
            for k in range(first, len(word), 2):
                p, q = (c, k), self.partner(disk, (c, k))
                out.append((p, q) if self.pos[p] < self.pos[q] else (q, p))
        return sorted(out, key=lambda ch: self.pos[ch[0]])

    def chord_at(self, disk: str, p: Point) -> Chord:
        q = self.partner(disk, p)
        return (p, q) if self.pos[p] < self.pos[q] else (q, p)

    def cross(self, x: Chord, y: Chord) -> bool:
        a, b = self.pos[x[0]], self.pos[x[1]]
        c, d = self.pos[y[0]], self.pos[y[1]]
        return a < c < b < d or c < a < d < b

    def crossings(self, disk: str | None = None) -> list[tuple[str, Chord, Chord]]:
        'sweep along the axis; a chord closing crosses every chord opened after it and still open'
        out = []
        for d in (disk,) if disk else (LOWER, UPPER):
            opened: list[Chord] = []
            for points in self.order:
                for p in points:
                    x = self.chord_at(d, p)
                    if x[0] == p:
                        opened.append(x)
                    elif opened[-1] == x:
                        opened.pop()
                    else:
                        i = opened.index(x)
                        out.extend((d, x, y) for y in opened[i + 1 :])
                        del opened[i]
        return out

    def swapped(self, pairs: Iterable[tuple[Point, Point]]) -> PLConfiguration:
        'the configuration with each pair of points exchanged on their segment'
        order = list(self.order)
        pos, index = dict(self.pos), dict(self.index)
        for a, c in pairs:
            s = self.seg(a) - 1
            points = list(order[s])
            i, j = index[a], index[c]
            points[i], points[j] = c, a
            order[s] = tuple(points)
            index[a], index[c] = j, i
            pos[a], pos[c] = pos[c], pos[a]
        new = PLConfiguration(self.b, self.words, tuple(order))
        new.__dict__.update(pos=pos, index=index)
        return new

    def crossing_count(self, c1: int | None = None, c2: int | None = None) -> int:
        n = 0
        for _, x, y in self.crossings():
            if c1 is None or {x[0][0], y[0][0]} == {c1, c2}:
                n += 1
        return n

    def validate(self):
        points = [p for ps in self.order for p in ps]
        expected = {(c, k) for c, w in enumerate(self.words) for k in range(len(w))}
        if len(points) != len(set(points)) or set(points) != expected:
            raise DegeneracyError('segment orders do not list every curve point once')
        for s, ps in enumerate(self.order, 1):
            if any(self.seg(p) != s for p in ps):
                raise DegeneracyError(f'point listed on the wrong segment e{s}')
        for w in self.words:
            if len(w) < 2 or len(w) % 2 or tri.reduce_word(w) != tuple(w):
                raise DegeneracyError(f'curve {list(w)} is not taut against the axis')
        for _, x, y in self.crossings():
            if x[0][0] == y[0][0]:
                raise DegeneracyError('self-crossing curve')

    def polylines(self) -> list[list[tuple[Fraction, Fraction]]]:
        'tent drawing: punctures at (k, 0), infinity at the far right'
        xs: dict[Point, Fraction] = {}
        b = self.b
        for s, ps in enumerate(self.order, 1):
            n = len(ps)
            for j, p in enumerate(ps):
                if s <= b - 2:
                    xs[p] = s + Fraction(j + 1, n + 1)
                elif s == b - 1:
                    xs[p] = Fraction(b - 1 + j + 1)
                else:
                    xs[p] = Fraction(1 - (n - j))
        out = []
        for c, word in enumerate(self.words):
            line = []
            for k in range(len(word)):
                p, q = (c, k), (c, (k + 1) % len(word))
                x1, x2 = xs[p], xs[q]
                half = abs(x2 - x1) / 2
                apex = -half if k % 2 == 0 else half
                line.append((x1, Fraction(0)))
                line.append(((x1 + x2) / 2, apex))
            out.append(line)
        return out


@dataclasses.dataclass(frozen=True)
class ComplementComponent:
    punctures: frozenset[int]
    boundary_count: int

    @property
    def complexity(self) -> int:
        return len(self.punctures) + self.boundary_count - 3

    def to_json(self) -> dict:
        return {'punctures': sorted(self.punctures), 'boundary': self.boundary_count}


@dataclasses.dataclass(frozen=True)
class Face:
    punctures: frozenset[int]
    walks: tuple[int, ...]
    corners: int
    curves: frozenset[int]

    @property
    def boundary_count(self) -> int:
        return len(self.walks)


@dataclasses.dataclass(frozen=True)
class FilledSubsurface:
    component: ComplementComponent
    boundary: tuple[CurveKey, ...]
    hull: ComplementComponent
    hull_boundary: tuple[CurveKey, ...]

    def __iter__(self):
        yield self.component
        yield list(self.boundary)


def realize(k: CurveKey) -> PLConfiguration:
    arcs = tri.decode_arcs(k.b, k.weights)
    components = tri.trace_components(arcs)
    if len(components) != 1:
        raise MalformedKeyError(f'weights describe {len(components)} curves')
    cycle = components[0]
    word = tuple(s for s, _ in cycle)
    order = []
    for s in range(1, k.b + 1):
        here = sorted((j, i) for i, (t, j) in enumerate(cycle) if t == s)
        order.append(tuple((0, i) for _, i in here))
    return PLConfiguration(k.b, (word,), tuple(order))


def _forward(p: Point) -> str:
    'disk holding the arc from p to the next point of its curve'
    return LOWER if p[1] % 2 == 0 else UPPER


def _before(cfg: PLConfiguration, x: Point, y: Point, memo: dict[tuple[Point, Point], bool]) -> bool:
    'x precedes y on their common segment, read off where the two curves part going forward along x'
    b = cfg.b
    px, py, flip = x, y, False
    path: list[tuple[tuple[Point, Point], bool]] = []
    seen = set()
    while True:
        if (px, py) in memo:
            answer = memo[(px, py)] != flip
            break
        if (px, py) in seen:
            answer = True
            break
        seen.add((px, py))
        path.append(((px, py), flip))
        disk = _forward(px)
        s = cfg.seg(px)
        tx, ty = cfg.partner(disk, px), cfg.partner(disk, py)
        sx, sy = cfg.seg(tx), cfg.seg(ty)
        if sx != sy:
            answer = ((sy - s) % b < (sx - s) % b) != flip
            break
        # same target segment: the order there is reversed
        px, py, flip = tx, ty, not flip
    for state, f in path:
        memo[state] = answer != f
    return answer


def add_curve(cfg: PLConfiguration, k: CurveKey) -> PLConfiguration:
    'insert a new curve, merged into every segment by the parting rule'
    if k.b != cfg.b:
        raise MalformedKeyError(f'b mismatch: {k.b} != {cfg.b}')
    single = realize(k)
    c = len(cfg.words)
    words = cfg.words + single.words
    joint = PLConfiguration(cfg.b, words, cfg.order)
    memo: dict[tuple[Point, Point], bool] = {}
    order = []
    for old, new in zip(cfg.order, single.order):
        new = [(c, i) for _, i in new]
        merged: list[Point] = []
        i = j = 0
        while i < len(old) and j < len(new):
            if _before(joint, old[i], new[j], memo):
                merged.append(old[i])
                i += 1
            else:
                merged.append(new[j])
                j += 1
        merged.extend(old[i:])
        merged.extend(new[j:])
        order.append(tuple(merged))
    return PLConfiguration(cfg.b, words, tuple(order))


def _ladder_at(cfg: PLConfiguration, disk: str, x: Chord, y: Chord) -> list[tuple[Point, Point]] | None:
    'rungs of a bigon cornered at the crossing of x and y whose axis pieces hold no other point'
    index = cfg.index
    for a0 in x:
        for c0 in y:
            rungs: list[tuple[Point, Point]] = []
            visited = set()
            a, c, d = a0, c0, disk
            while cfg.seg(a) == cfg.seg(c) and abs(index[a] - index[c]) == 1 and (a, c) not in visited:
                visited.add((a, c))
                rungs.append((a, c))
                od = other_disk(d)
                if cfg.cross(cfg.chord_at(od, a), cfg.chord_at(od, c)):
                    return rungs
                a, c, d = cfg.partner(od, a), cfg.partner(od, c), od
    return None


def _find_ladder(cfg: PLConfiguration) -> list[tuple[Point, Point]] | None:
    for disk, x, y in cfg.crossings():
        if x[0][0] != y[0][0] and (rungs := _ladder_at(cfg, disk, x, y)):
            return rungs
    return None


def _ladder_near(cfg: PLConfiguration, points: set[Point]) -> list[tuple[Point, Point]] | None:
    'a bigon with a corner on a chord through one of the points'
    for disk in (LOWER, UPPER):
        chords = cfg.chords(disk)
        for x in {cfg.chord_at(disk, p) for p in points}:
            for y in chords:
                if y[0][0] != x[0][0] and cfg.cross(x, y) and (rungs := _ladder_at(cfg, disk, x, y)):
                    return rungs
    return None


def tauten(cfg: PLConfiguration) -> PLConfiguration:
    'remove bigons until none is left; each removal drops two crossings'
    cfg.validate()
    steps = sweeps = 0
    rungs = _find_ladder(cfg)
    while rungs is not None:
        cfg = cfg.swapped(rungs)
        steps += 1
        # a removal mostly exposes the next bigon next to it
        rungs = _ladder_near(cfg, {p for pair in rungs for p in pair})
        if rungs is None:
            sweeps += 1
            rungs = _find_ladder(cfg)
    if steps:
        log.debug('tauten: %d bigons removed, %d full sweeps', steps, sweeps)
    return cfg


def realize_family(curves: Iterable[CurveKey]) -> PLConfiguration:
    curves = list(curves)
    if not curves:
        raise SingleCurveExpectedError('empty family')
    cfg = realize(curves[0])
    for k in curves[1:]:
        cfg = tauten(add_curve(cfg, k))
    return cfg


@lru_cache(maxsize=1 << 16)
def _intersection(a: CurveKey, c: CurveKey) -> int:
    return realize_family([a, c]).crossing_count(0, 1)


def intersection_number(a: CurveKey, c: CurveKey) -> int:
    if a.b != c.b:
        raise MalformedKeyError(f'b mismatch: {a.b} != {c.b}')
    if a == c:
        return 0
    if c < a:
        a, c = c, a
    return _intersection(a, c)


def extract_key(cfg: PLConfiguration) -> CurveKey:
    if len(cfg.words) != 1:
        raise SingleCurveExpectedError(f'configuration holds {len(cfg.words)} curves')
    return CurveKey.from_word(cfg.b, cfg.words[0])


# face complex

Dart = tuple[int, int]  # (edge, 0 = along the arc direction, 1 = against it)


@dataclasses.dataclass
class _Edge:
    tail: tuple
    head: tuple
    curve: int
    disk: str
    chord: Chord
    vec: tuple[Fraction, Fraction]  # picture direction tail -> head


class _Arrangement:
    'the planar graph of a configuration: crossings and axis points, darts, faces'

    def __init__(self, cfg: PLConfiguration, attempt: int = 0):
        self.cfg = cfg
        self.edges: list[_Edge] = []
        self.out: dict[tuple, list[Dart]] = {}
        self.first: dict[tuple[str, Point], Dart] = {}  # dart leaving an axis point into a disk
        self.rot: dict[tuple, list[Dart]] = {}
        self.crossing_count = 0
        for disk in (LOWER, UPPER):
            self._build_disk(disk, attempt)
        self._rotations()

    def _t(self, disk: str, p: Point, attempt: int) -> Fraction:
        i = self.cfg.pos[p]
        t = i + Fraction(i * i, 97 + 2 * attempt) if attempt else Fraction(i)
        return t if disk == UPPER else -t

    def _build_disk(self, disk: str, attempt: int):
        cfg = self.cfg
        chords = cfg.chords(disk)
        ts = {p: self._t(disk, p, attempt) for ch in chords for p in ch}
        along: dict[Chord, list[tuple[Fraction, tuple]]] = {ch: [] for ch in chords}
        for d, x, y in cfg.crossings(disk):
            t1, t2, t3, t4 = ts[x[0]], ts[x[1]], ts[y[0]], ts[y[1]]
            u = (t1 * t2 - t3 * t4) / (t1 + t2 - t3 - t4)
            v = ('X', d, x, y)
            along[x].append((u, v))
            along[y].append((u, v))
            self.crossing_count += 1
        for ch, xs in along.items():
            p, q = ch
            tp, tq = ts[p], ts[q]
            xs.sort(key=lambda e: e[0] if tq > tp else -e[0])
            params = [u for u, _ in xs]
            if len(set(params)) != len(params):
                raise DegeneracyError('three arcs through one point')
            vec = (tq - tp, tq * tq - tp * tp)
            chain = [('A', p)] + [v for _, v in xs] + [('A', q)]
            for i in range(len(chain) - 1):
                e = len(self.edges)
                self.edges.append(_Edge(chain[i], chain[i + 1], p[0], disk, ch, vec))
                self.out.setdefault(chain[i], []).append((e, 0))
                self.out.setdefault(chain[i + 1], []).append((e, 1))
            self.first[(disk, p)] = (len(self.edges) - len(chain) + 1, 0)
            self.first[(disk, q)] = (len(self.edges) - 1, 1)

    def head(self, dart: Dart) -> tuple:
        e = self.edges[dart[0]]
        return e.head if dart[1] == 0 else e.tail

    def vec(self, dart: Dart) -> tuple[Fraction, Fraction]:
        x, y = self.edges[dart[0]].vec
        return (x, y) if dart[1] == 0 else (-x, -y)

    def _rotations(self):
        'ccw order of the four darts at each crossing'
        for v, darts in self.out.items():
            if v[0] != 'X':
                continue
            x, y = v[2], v[3]
            fp = next(d for d in darts if self.edges[d[0]].chord == x and d[1] == 0)
            bp = next(d for d in darts if self.edges[d[0]].chord == x and d[1] == 1)
            fq = next(d for d in darts if self.edges[d[0]].chord == y and d[1] == 0)
            bq = next(d for d in darts if self.edges[d[0]].chord == y and d[1] == 1)
            dp, dq = self.vec(fp), self.vec(fq)
            if dp[0] * dq[1] - dp[1] * dq[0] > 0:
                self.rot[v] = [fp, fq, bp, bq]
            else:
                self.rot[v] = [fp, bq, bp, fq]

    def rotate(self, v: tuple, dart: Dart, step: int) -> Dart:
        r = self.rot[v]
        return r[(r.index(dart) + step) % 4]

    @staticmethod
    def reverse(dart: Dart) -> Dart:
        return (dart[0], 1 - dart[1])

    def straight(self, v: tuple, dart: Dart) -> Dart:
        'the other dart at a degree-2 axis point'
        return next(d for d in self.out[v] if d != dart)

    def face_next(self, dart: Dart) -> Dart:
        'the face stays on the left'
        v = self.head(dart)
        r = self.reverse(dart)
        if v[0] == 'A':
            return self.straight(v, r)
        return self.rotate(v, r, -1)

    @cached_property
    def walks(self) -> tuple[list[list[Dart]], dict[Dart, int]]:
        walks: list[list[Dart]] = []
        walk_of: dict[Dart, int] = {}
        for e in range(len(self.edges)):
            for d in ((e, 0), (e, 1)):
                if d in walk_of:
                    continue
                walk = []
                x = d
                while x not in walk_of:
                    walk_of[x] = len(walks)
                    walk.append(x)
                    x = self.face_next(x)
                walks.append(walk)
        return walks, walk_of

    @cached_property
    def faces(self) -> list[Face]:
        cfg = self.cfg
        b = cfg.b
        walks, walk_of = self.walks
        if not walks:
            return [Face(frozenset(range(1, b + 1)), (), 0, frozenset())]
        parent = list(range(len(walks)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        punct: dict[int, set[int]] = {}
        points = [p for ps in cfg.order for p in ps]
        for k, x in enumerate(points):
            y = points[(k + 1) % len(points)]
            wx = walk_of[self.first[(LOWER, x)]]
            wy = walk_of[self.first[(UPPER, y)]]
            parent[find(wx)] = find(wy)
            sx, sy = cfg.seg(x), cfg.seg(y)
            d = (sy - sx) % b
            if d == 0 and k == len(points) - 1:
                d = b
            punct.setdefault(wx, set()).update(tri.cyclic(sx + i, b) for i in range(1, d + 1))
        groups: dict[int, list[int]] = {}
        for w in range(len(walks)):
            groups.setdefault(find(w), []).append(w)
        out = []
        for ws in groups.values():
            ps: set[int] = set()
            corners = 0
            curves = set()
            for w in ws:
                ps |= punct.get(w, set())
                for d in walks[w]:
                    curves.add(self.edges[d[0]].curve)
                    if self.head(d)[0] == 'X':
                        corners += 1
            out.append(Face(frozenset(ps), tuple(sorted(ws)), corners, frozenset(curves)))
        out.sort(key=lambda f: (sorted(f.punctures), f.walks))
        return out

    def graph_components(self) -> int:
        parent = list(range(len(self.cfg.words)))

        def find(i):
            while parent[i] != i:
                i = parent[i]
            return i

        for _, x, y in self.cfg.crossings():
            parent[find(x[0][0])] = find(y[0][0])
        return len({find(i) for i in range(len(parent))})

    def euler_ok(self) -> bool:
        'V - E + F = 1 + number of connected pieces of the union of curves'
        v = self.crossing_count + len(self.cfg.pos)
        return v - len(self.edges) + len(self.faces) == 1 + self.graph_components()

    def smoothing(self, step: dict[int, int]) -> list[list[tuple[Point, str]]]:
        'closed paths that switch curves at every crossing; step[curve] picks the paired arm'
        used: set[int] = set()
        paths = []
        for e in range(len(self.edges)):
            if e in used:
                continue
            path: list[tuple[Point, str]] = []
            d = (e, 0)
            while d[0] not in used:
                used.add(d[0])
                v = self.head(d)
                r = self.reverse(d)
                if v[0] == 'A':
                    d = self.straight(v, r)
                    path.append((v[1], self.edges[d[0]].disk))
                else:
                    d = self.rotate(v, r, step[self.edges[r[0]].curve])
            paths.append(path)
        return paths

    def walk_word(self, walk: Sequence[Dart]) -> list[tuple[Point, str]]:
        'axis points passed by a face walk, each with the disk of the leg that follows'
        out = []
        for d in walk:
            v = self.head(d)
            if v[0] == 'A':
                out.append((v[1], self.edges[self.face_next(d)[0]].disk))
        return out


def arrangement(cfg: PLConfiguration) -> _Arrangement:
    for attempt in range(4):
        try:
            return _Arrangement(cfg, attempt)
        except DegeneracyError:
            log.debug('degenerate picture, retrying with perturbed positions (%d)', attempt + 1)
    raise DegeneracyError('could not place the configuration generically')


def faces(cfg: PLConfiguration) -> list[Face]:
    return arrangement(cfg).faces


def minimality_certificate(cfg: PLConfiguration) -> bool:
    'no puncture-free monogon or bigon among the faces'
    return not any(f.boundary_count == 1 and f.corners <= 2 and not f.punctures for f in faces(cfg))


def loosen(cfg: PLConfiguration) -> PLConfiguration | None:
    'swap the first neighbouring points of two curves whose arcs cross on neither side; adds a bigon'
    for points in cfg.order:
        for p, q in zip(points, points[1:]):
            if p[0] == q[0]:
                continue
            if any(cfg.cross(cfg.chord_at(d, p), cfg.chord_at(d, q)) for d in (LOWER, UPPER)):
                continue
            return cfg.swapped([(p, q)])
    return None


def _path_curve(cfg: PLConfiguration, path: Sequence[tuple[Point, str]]) -> CurveKey | None:
    if not path:
        return None
    word = [cfg.seg(p) for p, _ in path]
    start = next((i for i, (_, d) in enumerate(path) if d == LOWER), 0)
    word = word[start:] + word[:start]
    try:
        key = CurveKey.from_word(cfg.b, word)
    except (InessentialCurveError, MalformedKeyError):
        return None
    return key


def _check_family(curves: Sequence[CurveKey]):
    for i, a in enumerate(curves):
        for c in curves[i + 1 :]:
            if intersection_number(a, c):
                raise NotAMulticurveError('curves cross')


def complement_structure(curves: Sequence[CurveKey]) -> tuple[list[ComplementComponent], list[tuple[int, int, int]]]:
    'components of the complement and, per curve, the two components it separates'
    curves = list(curves)
    if not curves:
        raise SingleCurveExpectedError('empty family')
    _check_family(curves)
    arr = arrangement(realize_family(curves))
    fs = arr.faces
    _, walk_of = arr.walks
    comps = [ComplementComponent(f.punctures, f.boundary_count) for f in fs]
    face_of_walk = {w: i for i, f in enumerate(fs) for w in f.walks}
    sides: dict[int, set[int]] = {}
    for d, w in walk_of.items():
        sides.setdefault(arr.edges[d[0]].curve, set()).add(face_of_walk[w])
    edges = []
    for ci in range(len(curves)):
        pair = sorted(sides[ci])
        if len(pair) == 2:
            edges.append((pair[0], pair[1], ci))
    return comps, edges


def complement_components(curves: Sequence[CurveKey]) -> list[ComplementComponent]:
    if not curves:
        return []
    comps, _ = complement_structure(curves)
    return sorted(comps, key=lambda c: (sorted(c.punctures), c.boundary_count))


def filled_subsurface(a: CurveKey, c: CurveKey) -> FilledSubsurface:
    if intersection_number(a, c) == 0:
        raise NotFillingError('curves do not cross')
    cfg = realize_family([a, c])
    arr = arrangement(cfg)
    walks, _ = arr.walks
    fs = arr.faces
    b = cfg.b

    def boundary_of(keep: int) -> tuple[ComplementComponent, tuple[CurveKey, ...]]:
        inside: set[int] = set()
        bounds: list[CurveKey] = []
        for f in fs:
            if len(f.punctures) <= keep:
                inside |= f.punctures
                continue
            key = _path_curve(cfg, arr.walk_word(walks[f.walks[0]]))
            if key is not None and key not in bounds:
                bounds.append(key)
            elif key is None:
                inside |= f.punctures
        return ComplementComponent(frozenset(inside), len(bounds)), tuple(sorted(bounds))

    comp, bounds = boundary_of(1)
    hull, hull_bounds = boundary_of(2)
    log.debug('filled subsurface b=%d: %s, hull %s', b, comp, hull)
    return FilledSubsurface(comp, bounds, hull, hull_bounds)


def resolve(a: CurveKey, c: CurveKey, flip: bool = False) -> list[CurveKey]:
    'smooth every crossing of a and c the same way; essential components only'
    cfg = realize_family([a, c])
    arr = arrangement(cfg)
    step = {0: 1, 1: -1} if not flip else {0: -1, 1: 1}
    paths = arr.smoothing(step)
    out = []
    for path in paths:
        key = _path_curve(cfg, path)
        if key is not None and key not in out:
            out.append(key)
    return sorted(out)


# output


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def to_json(cfg: PLConfiguration) -> dict:
    return {
        'b': cfg.b,
        'frame': tri.frame_metadata(cfg.b),
        'punctures': [[k, 0] for k in range(1, cfg.b)],
        'words': [list(w) for w in cfg.words],
        'curves': [[[_frac(x), _frac(y)] for x, y in line] for line in cfg.polylines()],
    }


def dump_json(cfg: PLConfiguration) -> str:
    return json.dumps(to_json(cfg), sort_keys=True, indent=1) + '\n'


def to_svg(cfg: PLConfiguration) -> str:
    lines = cfg.polylines()
    pts = [p for line in lines for p in line] + [(Fraction(k), Fraction(0)) for k in range(1, cfg.b)]
    scale = lcm(*(x.denominator for p in pts for x in p)) * 20
    xs = [int(x * scale) for x, _ in pts]
    ys = [int(-y * scale) for _, y in pts]
    pad = scale
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {w} {h}">']
    for line in lines:
        d = ' '.join(f'{int(x * scale)},{int(-y * scale)}' for x, y in line)
        out.append(f'<polygon points="{d}" fill="none" stroke="black" stroke-width="{scale // 10 or 1}"/>')
    for k in range(1, cfg.b):
        out.append(f'<circle cx="{k * scale}" cy="0" r="{scale // 8 or 1}" fill="red"/>')
    out.append('</svg>')
    return '\n'.join(out) + '\n'
