"""Atomic file replacement."""

import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterator

from ..errors import ExportError

_FILE_MODE = 0o666


def _current_umask() -> int:
    mask = os.umask(0)
    os.umask(mask)
    return mask


@contextmanager
def atomic_writer(path: Path) -> Iterator[IO[str]]:
    """
    Write to a temp file next to `path`, then rename over it on success.

    The finished file gets the usual 0666 & ~umask permissions (mkstemp
    alone would leave it 0600).

    Raises:
        ExportError: if the directory or file cannot be created or written
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    except OSError as e:
        raise ExportError(f"Cannot create output file: {e.strerror or e}", path) from e

    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            os.chmod(tmp_name, _FILE_MODE & ~_current_umask())
            yield f
        os.replace(tmp_name, path)
    except BaseException as e:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        if isinstance(e, OSError):
            raise ExportError(f"Cannot write output file: {e.strerror or e}", path) from e
        raise
