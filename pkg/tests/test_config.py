import pytest

from curvekit.config import Config, ConfigError


def test_defaults():
    cfg = Config(threads=1)
    assert cfg.b == 7
    assert cfg.window is None
    assert cfg.witnesses == 10
    assert cfg.chain_depth == 4
    assert cfg.log_level == 'WARNING'


def test_load(tmp_path):
    path = tmp_path / 'curvekit.toml'
    path.write_text('[curvekit]\nb = 9\nwindow = 8\nlog_level = "debug"\nthreads = 2\n', encoding='utf-8')
    cfg = Config.load(str(path))
    assert (cfg.b, cfg.window, cfg.log_level, cfg.threads) == (9, 8, 'DEBUG', 2)


def test_load_without_table(tmp_path):
    path = tmp_path / 'other.toml'
    path.write_text('[tool]\nx = 1\n', encoding='utf-8')
    assert Config.load(str(path)).b == 7


@pytest.mark.parametrize(
    'text',
    [
        '[curvekit]\nbogus = 1\n',
        '[curvekit\n',
        '[curvekit]\nb = 3\n',
        '[curvekit]\nwitnesses = 0\n',
        '[curvekit]\nlog_level = "loud"\n',
    ],
)
def test_bad_config(tmp_path, text):
    path = tmp_path / 'bad.toml'
    path.write_text(text, encoding='utf-8')
    with pytest.raises(ConfigError):
        Config.load(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        Config.load(str(tmp_path / 'missing.toml'))


def test_replace():
    cfg = Config(threads=1)
    new = cfg.replace(b=8, window=None, seed=3)
    assert (new.b, new.window, new.seed) == (8, None, 3)
    assert cfg.b == 7
    with pytest.raises(ConfigError):
        cfg.replace(window=1)


def test_snapshot():
    snap = Config(threads=1).snapshot()
    assert list(snap) == sorted(snap)
    assert snap['threads'] == 1
