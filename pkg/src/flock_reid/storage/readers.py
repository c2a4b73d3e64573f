"""Readers for similarity matrix and ordering files.

Both formats are plain CSV of decimal numbers without a header. Lines whose
first non-blank character is '#' and blank lines are ignored; error
positions refer to physical 1-based file lines and columns.
"""

import csv
import math
from pathlib import Path
from typing import Iterator, List, Tuple, Union

import numpy as np
import structlog

from ..errors import IngestionError, PermutationError
from ..simulate.models import CameraOrdering

logger = structlog.get_logger()

PathLike = Union[str, Path]


def _data_lines(path: Path) -> Iterator[Tuple[int, List[str]]]:
    try:
        f = open(path, newline="", encoding="utf-8")
    except OSError as e:
        raise IngestionError(f"Cannot open file: {e.strerror}", path=path) from e
    with f:
        try:
            for line_no, line in enumerate(f, start=1):
                stripped = line.strip()
                if not stripped or stripped.startswith("#"):
                    continue
                yield line_no, next(csv.reader([stripped]))
        except UnicodeDecodeError as e:
            raise IngestionError("File is not valid UTF-8", path=path) from e


def read_similarity_matrix(path: PathLike) -> np.ndarray:
    """
    Parse a query x gallery similarity CSV.

    Args:
        path: CSV file, one query row per line

    Raises:
        IngestionError: on unparsable cells, values outside [0, 1], ragged
            rows, or an empty file
    """
    path = Path(path)
    rows: List[List[float]] = []
    width = None
    for line_no, cells in _data_lines(path):
        row = []
        for col_no, cell in enumerate(cells, start=1):
            try:
                value = float(cell)
            except ValueError:
                raise IngestionError(f"Cannot parse {cell.strip()!r} as a number", path, line_no, col_no)
            if not math.isfinite(value):
                raise IngestionError(f"Value {cell.strip()!r} is not finite", path, line_no, col_no)
            if not 0.0 <= value <= 1.0:
                raise IngestionError(f"Value {cell.strip()} is out of [0,1]", path, line_no, col_no)
            row.append(value)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise IngestionError(f"Row has {len(row)} columns, expected {width}", path, line_no)
        rows.append(row)

    if not rows:
        raise IngestionError("No matrix rows found", path=path)

    logger.debug("Read similarity matrix", path=str(path), rows=len(rows), cols=width)
    return np.array(rows, dtype=np.float64)


def read_ordering(path: PathLike) -> CameraOrdering:
    """
    Parse an ordering file.

    Each data line is either "y" (x is the line's ordinal among data lines)
    or "x,y". All lines must use the same form.
    """
    path = Path(path)
    pairs: List[List[int]] = []
    width = None
    for line_no, cells in _data_lines(path):
        if len(cells) not in (1, 2):
            raise IngestionError(f"Expected 'y' or 'x,y', got {len(cells)} fields", path, line_no)
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise IngestionError("Mixed 'y' and 'x,y' lines", path, line_no)
        values = []
        for col_no, cell in enumerate(cells, start=1):
            try:
                values.append(int(cell))
            except ValueError:
                raise IngestionError(f"Cannot parse {cell.strip()!r} as an integer", path, line_no, col_no)
        pairs.append(values)

    if not pairs:
        raise IngestionError("No ordering rows found", path=path)

    try:
        if width == 1:
            return CameraOrdering(y=np.array([p[0] for p in pairs]))
        return CameraOrdering(x=np.array([p[0] for p in pairs]), y=np.array([p[1] for p in pairs]))
    except PermutationError as e:
        raise IngestionError(f"Not a permutation: {e}", path=path) from e
