from __future__ import annotations

import functools
import json
import logging
import os
from collections.abc import Callable

import click

from . import __project_name__, __version__
from .config import Config
from .curves import CurveKey, MappingWord, apply_word, block_curve, classify, separation
from .engine import intersection_number
from .errors import CurvekitError
from .export import FORMATS, OBJECTS, export_graph
from .file_utils import dumps, write_json, write_text
from .suites import SUITES, run_suite

log = logging.getLogger(__name__)

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


def _errors(func: Callable) -> Callable:
    'library errors as one-line click errors'

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CurvekitError as e:
            raise click.ClickException(str(e)) from e
        except OSError as e:
            raise click.ClickException(f'{e.filename}: {e.strerror}') from e

    return wrapper


def _parse_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise click.UsageError(f'{source}: line {e.lineno} column {e.colno}: {e.msg}') from e


def _json_arg(value: str, source: str):
    '"@file" reads the file, anything else is JSON text'
    if value.startswith('@'):
        filename = value[1:]
        with open(filename, encoding='utf-8') as f:
            return _parse_json(f.read(), filename)
    return _parse_json(value, source)


def _curve(value: str, source: str = 'curve') -> CurveKey:
    return CurveKey.from_json(_json_arg(value, source))


def _word(value: str | None) -> MappingWord:
    if not value:
        return MappingWord()
    return MappingWord.from_json(_json_arg(value, 'word'))


def _setup_logging(verbose: int, cfg: Config):
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, cfg.log_level)
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)


@click.group()
@click.version_option(__version__, prog_name=__project_name__)
@click.option('-v', '--verbose', count=True, help='More log output on stderr (-vv for debug)')
@click.option('--config', 'config_file', type=click.Path(dir_okay=False), help='TOML file with a [curvekit] table')
@click.pass_context
@_errors
def main(ctx: click.Context, verbose: int, config_file: str | None):
    'Curves on punctured spheres: verification suites, exports and curve tools.'
    cfg = Config.load(config_file) if config_file else Config()
    _setup_logging(verbose, cfg)
    ctx.obj = cfg


@main.command()
@click.argument('suite', type=click.Choice(SUITES + ('all',)))
@click.option('--b', 'b', type=int, help='Puncture count')
@click.option('--window', type=int, help='Search window W (curve weight bound)')
@click.option('--witnesses', type=int, help='Filling witnesses per division')
@click.option('--seed', type=int, help='Random seed')
@click.option('--samples', type=int, help='Random sample count')
@click.option('--max-den', type=int, help='Farey denominator bound')
@click.option('--word-length', type=int, help='Random word length')
@click.option('--chain-depth', type=int, help='Triple chain search depth')
@click.option('--threads', type=int, help='Worker threads (default CURVEKIT_THREADS or 1)')
@click.option('--only', default='', help='Run only check ids containing these words; "-word" excludes')
@click.option('--report', type=click.Path(dir_okay=False), help='Write the JSON report here')
@click.pass_obj
@_errors
def verify(cfg: Config, suite: str, report: str | None, only: str, **knobs):
    'Run a verification suite; exit 0 pass, 1 failure, 2 unresolved within the window.'
    cfg = cfg.replace(**knobs)
    result = run_suite(suite, cfg, only)
    for line in result.lines():
        click.echo(line)
    if report:
        write_json(report, result.to_json())
        log.info('report written to %s', report)
        certificates = result.certificates()
        if certificates:
            folder = report + '.d'
            os.makedirs(folder, exist_ok=True)
            for check_id, data in certificates:
                write_json(os.path.join(folder, check_id + '.json'), data)
            log.info('%d certificates written to %s', len(certificates), folder)
    raise SystemExit(result.exit_code)


@main.command()
@click.argument('obj', metavar='OBJECT', type=click.Choice(OBJECTS))
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='json', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), help='Output file (default stdout)')
@click.option('--b', 'b', type=int, help='Puncture count for rigid-set and census')
@click.option('--radius', type=int, default=2, show_default=True, help='Farey ball radius')
@click.option('--max-den', type=int, default=10, show_default=True, help='Farey denominator bound')
@click.option('--word', help='MappingWord JSON (or @file) transporting the heptagon')
@click.pass_obj
@_errors
def export(
    cfg: Config, obj: str, fmt: str, out: str | None, b: int | None, radius: int, max_den: int, word: str | None
):
    'Write a graph or table as DOT, JSON or CSV.'
    text = export_graph(obj, fmt, b or cfg.b, radius, max_den, _word(word))
    if out:
        write_text(out, text)
    else:
        click.echo(text, nl=False)


@main.group()
def curve():
    'Curve tools; CURVE arguments are CurveKey JSON or @file.'


@curve.command()
@click.argument('a')
@click.argument('c')
@_errors
def intersect(a: str, c: str):
    'Geometric intersection number.'
    n = intersection_number(_curve(a, 'first curve'), _curve(c, 'second curve'))
    click.echo(dumps({'intersection': n}), nl=False)


@curve.command('separation')
@click.argument('a')
@_errors
def separation_(a: str):
    'Puncture separation of a curve.'
    click.echo(dumps(separation(_curve(a)).to_json()), nl=False)


@curve.command('classify')
@click.argument('a')
@_errors
def classify_(a: str):
    'Minimal, 1-separating or strongly separating.'
    click.echo(dumps(classify(_curve(a)).to_json()), nl=False)


@curve.command('apply-word')
@click.argument('word')
@click.argument('a')
@_errors
def apply_word_(word: str, a: str):
    'Image of a curve under a MappingWord (letters act right to left).'
    click.echo(dumps(apply_word(_word(word), _curve(a)).to_json()), nl=False)


@curve.command()
@click.option('--b', 'b', type=int, required=True, help='Puncture count')
@click.argument('punctures', type=int, nargs=-1, required=True)
@_errors
def block(b: int, punctures: tuple[int, ...]):
    'Curve around a cyclic interval of punctures.'
    click.echo(dumps(block_curve(b, punctures).to_json()), nl=False)


@curve.command()
@click.argument('a')
@_errors
def word(a: str):
    'Cyclic segment word of a curve.'
    k = _curve(a)
    click.echo(dumps({'b': k.b, 'word': list(k.word)}), nl=False)


@curve.command('from-word')
@click.option('--b', 'b', type=int, required=True, help='Puncture count')
@click.argument('segments', type=int, nargs=-1, required=True)
@_errors
def from_word(b: int, segments: tuple[int, ...]):
    'Curve from a cyclic segment word.'
    click.echo(dumps(CurveKey.from_word(b, segments).to_json()), nl=False)


@curve.command()
@click.argument('filename', type=click.Path(exists=True, dir_okay=False))
@_errors
def load(filename: str):
    'Validate a CurveKey file and print it canonically.'
    click.echo(dumps(_curve('@' + filename).to_json()), nl=False)


@curve.command()
@click.argument('a')
@click.option('--out', type=click.Path(dir_okay=False), required=True)
@_errors
def save(a: str, out: str):
    'Validate a curve and write it to a file.'
    write_json(out, _curve(a).to_json())


if __name__ == '__main__':
    main()  # pylint: disable=no-value-for-parameter
