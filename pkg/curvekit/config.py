from __future__ import annotations

import dataclasses
import logging
import tomllib
from typing import Any

from .errors import CurvekitError
from .thread_utils import default_threads

log = logging.getLogger(__name__)

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


class ConfigError(CurvekitError):
    pass


@dataclasses.dataclass
class Config:
    b: int = 7
    window: int | None = None
    witnesses: int = 10
    max_den: int = 50
    word_length: int = 20
    samples: int = 500
    seed: int = 0
    chain_depth: int = 4
    threads: int = dataclasses.field(default_factory=default_threads)
    log_level: str = 'WARNING'

    def __post_init__(self):
        if self.b < 4:
            raise ConfigError(f'b = {self.b} < 4')
        if self.window is not None and self.window < 2:
            raise ConfigError(f'window = {self.window} < 2')
        for name in ('witnesses', 'max_den', 'word_length', 'samples', 'chain_depth', 'threads'):
            if getattr(self, name) < 1:
                raise ConfigError(f'{name} must be positive')
        self.log_level = self.log_level.upper()
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(f'unknown log level {self.log_level}')

    def replace(self, **changes: Any) -> Config:
        'apply the non-None changes'
        return dataclasses.replace(self, **{k: v for k, v in changes.items() if v is not None})

    def snapshot(self) -> dict:
        return dict(sorted(dataclasses.asdict(self).items()))

    @classmethod
    def from_dict(cls, data: dict) -> Config:
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - names)
        if unknown:
            raise ConfigError(f'unknown config keys: {", ".join(unknown)}')
        try:
            return cls(**data)
        except TypeError as e:
            raise ConfigError(str(e)) from e

    @classmethod
    def load(cls, filename: str) -> Config:
        'the [curvekit] table of a TOML file'
        try:
            with open(filename, 'rb') as f:
                data = tomllib.load(f)
        except (OSError, tomllib.TOMLDecodeError) as e:
            raise ConfigError(f'{filename}: {e}') from e
        log.debug('config loaded from %s', filename)
        return cls.from_dict(data.get('curvekit', {}))
