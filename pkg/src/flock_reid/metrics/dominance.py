"""Diagonal dominance of similarity grids."""

import numpy as np
from numpy.typing import ArrayLike

from ..errors import MatrixValidationError


def _square_grid(grid: ArrayLike) -> np.ndarray:
    values = np.asarray(grid, dtype=np.float64)
    if values.ndim != 2 or values.shape[0] != values.shape[1] or values.shape[0] < 1:
        raise MatrixValidationError(f"Expected a non-empty square grid, got shape {values.shape}")
    return values


def diagonal_dominance(grid: ArrayLike) -> float:
    """mean(diagonal) / mean(off-diagonal) of a square grid."""
    values = _square_grid(grid)
    n = values.shape[0]
    if n < 2:
        raise MatrixValidationError("Diagonal dominance undefined for a grid without off-diagonal entries")

    diagonal_sum = float(np.trace(values))
    off_mean = (float(values.sum()) - diagonal_sum) / (n * n - n)
    if off_mean <= 0:
        raise MatrixValidationError("Diagonal dominance undefined: off-diagonal mean is zero")
    return (diagonal_sum / n) / off_mean


def diagonal_hit_rate(grid: ArrayLike) -> float:
    """
    Fraction of rows whose maximum sits on the diagonal.

    Ties go to the first column, as with the gallery scan. Unlike
    diagonal_dominance this is insensitive to how far the off-diagonal
    values rise, only to whether the diagonal stands out in its row.
    """
    values = _square_grid(grid)
    hits = np.argmax(values, axis=1) == np.arange(values.shape[0])
    return float(np.count_nonzero(hits)) / values.shape[0]
