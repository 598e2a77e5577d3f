from __future__ import annotations

import json
import logging
import os
import tempfile
from typing import Any

log = logging.getLogger(__name__)


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=1) + '\n'


def write_text(filename: str, text: str):
    """
    Write text to filename atomically.
    """

    # write to temporary file first
    dirname = os.path.dirname(filename) or '.'
    osfilehandle, tmpfilename = tempfile.mkstemp('.part', os.path.basename(filename) + '.', dirname, text=True)
    try:
        with open(osfilehandle, 'w', encoding='utf-8') as filehandle:
            filehandle.write(text)
    except BaseException:
        os.remove(tmpfilename)
        raise

    # after writing the temporary file, replace the original file with it
    try:
        os.remove(filename)
    except OSError:
        pass
    os.rename(tmpfilename, filename)
    log.debug('wrote %s (%d bytes)', filename, len(text))


def write_json(filename: str, data: Any):
    write_text(filename, dumps(data))


def read_json(filename: str) -> Any:
    with open(filename, encoding='utf-8') as f:
        return json.load(f)
