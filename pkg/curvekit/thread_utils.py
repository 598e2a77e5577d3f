from __future__ import annotations

import logging
import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

log = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def default_threads() -> int:
    'CURVEKIT_THREADS or 1'
    try:
        n = int(os.environ.get('CURVEKIT_THREADS', '1'))
    except ValueError:
        return 1
    return max(n, 1)


def run_parallel(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> list[R]:
    'map func over items, results in input order'
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [func(i) for i in items]
    log.debug('run_parallel: %d items on %d threads', len(items), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))
