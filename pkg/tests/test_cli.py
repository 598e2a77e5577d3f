import json

import pytest
from click.testing import CliRunner

from curvekit.__main__ import main
from curvekit.curves import MappingWord, apply_word, block_curve
from curvekit.file_utils import dumps, read_json


@pytest.fixture
def runner():
    return CliRunner()


def arg(*punctures, b=7):
    return json.dumps(block_curve(b, punctures).to_json())


def test_version(runner):
    result = runner.invoke(main, ['--version'])
    assert result.exit_code == 0
    assert 'curvekit' in result.output


def test_intersect(runner):
    result = runner.invoke(main, ['curve', 'intersect', arg(1, 2, 3), arg(2, 3, 4)])
    assert result.exit_code == 0
    assert json.loads(result.output) == {'intersection': 2}


def test_block_and_word(runner):
    result = runner.invoke(main, ['curve', 'block', '--b', '7', '1', '2'])
    assert result.exit_code == 0
    assert result.output == dumps(block_curve(7, (1, 2)).to_json())
    result = runner.invoke(main, ['curve', 'word', arg(1, 2)])
    assert json.loads(result.output) == {'b': 7, 'word': [2, 7]}
    result = runner.invoke(main, ['curve', 'from-word', '--b', '7', '2', '7'])
    assert result.output == dumps(block_curve(7, (1, 2)).to_json())


def test_separation_and_classify(runner):
    result = runner.invoke(main, ['curve', 'separation', arg(1, 2, 3)])
    assert json.loads(result.output) == {'b': 7, 'sideA': [1, 2, 3]}
    result = runner.invoke(main, ['curve', 'classify', arg(1, 2, 3)])
    data = json.loads(result.output)
    assert data['sides'] == [3, 4]
    assert data['one_separating'] and not data['minimal']


def test_apply_word(runner):
    result = runner.invoke(main, ['curve', 'apply-word', '', arg(1, 2)])
    assert result.exit_code == 0
    assert result.output == dumps(block_curve(7, (1, 2)).to_json())
    w = MappingWord.H(2)
    result = runner.invoke(main, ['curve', 'apply-word', json.dumps(w.to_json()), arg(1, 2)])
    assert result.output == dumps(apply_word(w, block_curve(7, (1, 2))).to_json())


def test_malformed_json(runner):
    result = runner.invoke(main, ['curve', 'intersect', '{"b": 7,', arg(1, 2)])
    assert result.exit_code == 2
    assert 'line 1 column' in result.output


def test_bad_key(runner):
    result = runner.invoke(main, ['curve', 'classify', '{"b": 7}'])
    assert result.exit_code == 1
    assert 'bad CurveKey JSON' in result.output


def test_save_and_load(runner, tmp_path):
    path = str(tmp_path / 'curve.json')
    result = runner.invoke(main, ['curve', 'save', arg(2, 3), '--out', path])
    assert result.exit_code == 0
    assert read_json(path) == block_curve(7, (2, 3)).to_json()
    result = runner.invoke(main, ['curve', 'load', path])
    assert result.output == dumps(block_curve(7, (2, 3)).to_json())
    result = runner.invoke(main, ['curve', 'intersect', '@' + path, arg(1, 2)])
    assert json.loads(result.output) == {'intersection': 2}


def test_export_octagon(runner, tmp_path):
    path = str(tmp_path / 'octagon.json')
    result = runner.invoke(main, ['export', 'octagon', '--out', path])
    assert result.exit_code == 0
    data = read_json(path)
    assert data['schema'] == 'curvekit.graph.v1'
    assert len(data['nodes']) == 8
    assert len(data['edges']) == 12


def test_export_census_csv(runner):
    result = runner.invoke(main, ['export', 'census', '--format', 'csv', '--b', '7'])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith('b,nu,type')
    assert len(lines) == 4


def test_export_errors(runner):
    result = runner.invoke(main, ['export', 'octagon', '--format', 'svg'])
    assert result.exit_code == 2
    result = runner.invoke(main, ['export', 'census', '--format', 'dot'])
    assert result.exit_code == 1
    assert 'csv or json' in result.output


def test_verify(runner, tmp_path):
    path = str(tmp_path / 'report.json')
    result = runner.invoke(main, ['verify', 'supports', '--only', 'hinges', '--report', path])
    assert result.exit_code == 0
    assert '1 passed, 0 failed, 0 unresolved' in result.output
    report = read_json(path)
    assert report['schema'] == 'curvekit.report.v1'
    assert [c['id'] for c in report['checks']] == ['supports-hinges']
    assert report['totals'] == {'pass': 1, 'fail': 0, 'unresolved': 0}


def test_verify_writes_certificates(runner, tmp_path):
    path = str(tmp_path / 'report.json')
    result = runner.invoke(main, ['verify', 'detectors', '--only', 'octagon -transfer', '--report', path])
    assert result.exit_code == 0
    report = read_json(path)
    assert [c['id'] for c in report['checks']] == ['detectors-octagon']
    assert report['checks'][0]['certificate'] == 'detectors-octagon.json'
    assert [p.name for p in (tmp_path / 'report.json.d').iterdir()] == ['detectors-octagon.json']
    certificate = read_json(str(tmp_path / 'report.json.d' / 'detectors-octagon.json'))
    assert len(certificate['edges']) == 12


def test_verify_unknown_suite(runner):
    result = runner.invoke(main, ['verify', 'nonsense'])
    assert result.exit_code == 2


def test_config_file(runner, tmp_path):
    path = tmp_path / 'curvekit.toml'
    path.write_text('[curvekit]\nbogus = 1\n', encoding='utf-8')
    result = runner.invoke(main, ['--config', str(path), 'curve', 'block', '--b', '7', '1', '2'])
    assert result.exit_code == 1
    assert 'bogus' in result.output
