from __future__ import annotations

import csv
import io
import logging

import networkx as nx

from .curves import CurveKey, MappingWord, apply_word, block_curve
from .detectors import heptagon_certificate, octagon_certificate
from .engine import intersection_number
from .errors import CurvekitError
from .farey import ZERO, Slope, farey_ball
from .file_utils import dumps
from .rigid import build_rigid_set
from .supports import census

log = logging.getLogger(__name__)

OBJECTS = ('rigid-set', 'farey-ball', 'octagon', 'heptagon', 'census')
FORMATS = ('dot', 'json', 'csv')


class ExportError(CurvekitError):
    pass


def _label(node) -> str:
    if isinstance(node, tuple):
        return ','.join(map(str, node))
    return str(node)


def graph_to_dot(name: str, g: nx.Graph, curves: dict | None = None) -> str:
    lines = [f'graph "{name}" {{']
    for v in sorted(g.nodes, key=_label):
        attrs = f'label="{_label(v)}"'
        if curves and v in curves:
            attrs += ' weights="' + ' '.join(map(str, curves[v].weights)) + '"'
        lines.append(f'  "{_label(v)}" [{attrs}];')
    for x, y in sorted((tuple(sorted((_label(x), _label(y)))) for x, y in g.edges)):
        lines.append(f'  "{x}" -- "{y}";')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def graph_to_json(name: str, g: nx.Graph, curves: dict | None = None, extra: dict | None = None) -> str:
    nodes = []
    for v in sorted(g.nodes, key=_label):
        node = {'id': _label(v)}
        if curves and v in curves:
            node['curve'] = curves[v].to_json()
        nodes.append(node)
    data = {
        'schema': 'curvekit.graph.v1',
        'name': name,
        'nodes': nodes,
        'edges': sorted(sorted((_label(x), _label(y))) for x, y in g.edges),
    }
    if extra:
        data.update(extra)
    return dumps(data)


def _disjointness_graph(curves: list[CurveKey]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(len(curves)))
    for i, a in enumerate(curves):
        for j in range(i + 1, len(curves)):
            if intersection_number(a, curves[j]) == 0:
                g.add_edge(i, j)
    return g


def _render(name: str, g: nx.Graph, fmt: str, curves: dict | None = None, extra: dict | None = None) -> str:
    if fmt == 'dot':
        return graph_to_dot(name, g, curves)
    if fmt == 'json':
        return graph_to_json(name, g, curves, extra)
    raise ExportError(f'{name} cannot be written as {fmt}')


def census_csv(rows: list[dict]) -> str:
    out = io.StringIO()
    if rows:
        w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator='\n')
        w.writeheader()
        w.writerows(rows)
    return out.getvalue()


def export_graph(
    obj: str,
    fmt: str,
    b: int = 7,
    radius: int = 2,
    max_den: int = 10,
    word: MappingWord = MappingWord(),
) -> str:
    'serialize one of OBJECTS'
    if fmt not in FORMATS:
        raise ExportError(f'unknown format {fmt}')
    log.debug('export %s as %s', obj, fmt)
    if obj == 'rigid-set':
        X = build_rigid_set(b)
        return _render(f'X_{b}', X.graph, fmt, X.embedding)
    if obj == 'farey-ball':
        g = farey_ball(ZERO, radius, max_den)
        g = nx.relabel_nodes(g, {s: str(s) for s in g.nodes if isinstance(s, Slope)})
        return _render(f'farey-ball-{radius}', g, fmt)
    if obj == 'octagon':
        O = octagon_certificate(8)
        return _render('octagon', O.graph, fmt, O.embedding)
    if obj == 'heptagon':
        std = (block_curve(7, (1, 2, 3)), block_curve(7, (2, 3, 4)))
        cert = heptagon_certificate(tuple(apply_word(word, c) for c in std), word)
        curves = list(cert.cycle)
        g = _disjointness_graph(curves)
        return _render('heptagon', g, fmt, dict(enumerate(curves)), {'word': word.to_json()})
    if obj == 'census':
        rows = census(b)
        if fmt == 'csv':
            return census_csv(rows)
        if fmt == 'json':
            return dumps({'schema': 'curvekit.census.v1', 'b': b, 'rows': rows})
        raise ExportError('census is written as csv or json')
    raise ExportError(f'unknown object {obj}')
