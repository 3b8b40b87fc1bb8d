"""Output helpers: atomic file writes and CSV text."""
from __future__ import annotations

import csv
import io
import os
import sys
import tempfile
from typing import Iterable, Sequence


def atomic_write(path: str, text: str) -> None:
    """Write ``text`` to ``path`` so readers never see a partial file.

    The data goes to a temporary file in the same directory, is flushed to
    disk and then renamed over the target.
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def emit(text: str, path: str | None = None) -> None:
    if path and path != "-":
        atomic_write(path, text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()
