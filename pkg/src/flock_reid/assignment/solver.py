"""Dense O(n^3) assignment solver.

Wraps scipy.optimize.linear_sum_assignment (a shortest-augmenting-path
Hungarian variant over real-valued costs) with the validation and objective
conventions used by flock similarity.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import structlog
from numpy.typing import ArrayLike
from scipy.optimize import linear_sum_assignment

from ..errors import MatrixValidationError, RangeError

logger = structlog.get_logger()


@dataclass(frozen=True)
class Assignment:
    """One-to-one matching: mapping[i] is the column matched to row i."""

    mapping: Tuple[int, ...]
    objective: float


def as_square_matrix(values: ArrayLike) -> np.ndarray:
    """
    Coerce input into a finite n x n float matrix.

    Raises:
        MatrixValidationError: if the input is not 2-D, not square, empty,
            or contains NaN/infinite entries
    """
    try:
        matrix = np.asarray(values, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise MatrixValidationError(f"Matrix is not numeric: {e}") from e

    if matrix.ndim != 2:
        raise MatrixValidationError(f"Expected a 2-D matrix, got {matrix.ndim} dimension(s)")
    n_rows, n_cols = matrix.shape
    if n_rows != n_cols:
        raise MatrixValidationError(f"Expected a square matrix, got {n_rows}x{n_cols}")
    if n_rows < 1:
        raise MatrixValidationError("Matrix order must be at least 1")
    if not np.all(np.isfinite(matrix)):
        raise MatrixValidationError("Matrix contains NaN or infinite entries")
    return matrix


def check_unit_interval(matrix: np.ndarray) -> None:
    """Raise RangeError unless every entry lies in [0, 1]."""
    bad = np.argwhere((matrix < 0.0) | (matrix > 1.0))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise RangeError(f"Similarity at ({i}, {j}) = {matrix[i, j]!r} is outside [0, 1]")


def _min_mapping(costs: np.ndarray) -> np.ndarray:
    n = costs.shape[0]
    if n == 1:
        return np.zeros(1, dtype=np.intp)
    rows, cols = linear_sum_assignment(costs)
    # linear_sum_assignment returns rows in ascending order for square input
    mapping = np.empty(n, dtype=np.intp)
    mapping[rows] = cols
    return mapping


def _selected(matrix: np.ndarray, mapping: np.ndarray) -> np.ndarray:
    return matrix[np.arange(matrix.shape[0]), mapping]


def solve_min_assignment(costs: ArrayLike) -> Assignment:
    """
    Minimum-cost perfect matching on a square, non-negative cost matrix.

    Args:
        costs: n x n matrix of finite, non-negative costs

    Returns:
        Assignment whose objective is the total cost of the selected entries

    Raises:
        MatrixValidationError: on non-square, empty, non-finite or negative input
    """
    matrix = as_square_matrix(costs)
    if np.any(matrix < 0.0):
        raise MatrixValidationError("Cost matrix contains negative entries")

    mapping = _min_mapping(matrix)
    return Assignment(
        mapping=tuple(int(j) for j in mapping),
        objective=float(_selected(matrix, mapping).sum()),
    )


def max_similarity_mapping(similarities: np.ndarray) -> Tuple[np.ndarray, float]:
    """
    Unchecked maximization core: (mapping, mean selected similarity).

    Callers must have validated `similarities` already; used on the hot path
    of gallery scans where the full similarity matrix was checked once.
    """
    mapping = _min_mapping(1.0 - similarities)
    mean = float(_selected(similarities, mapping).sum()) / similarities.shape[0]
    return mapping, mean


def solve_max_assignment(similarities: ArrayLike) -> Assignment:
    """
    Maximum-similarity perfect matching for entries in [0, 1].

    Solved as the minimization over b_ij = 1 - p_ij. The objective is the
    mean selected similarity, i.e. 1 - (min cost) / n.

    Args:
        similarities: n x n matrix with entries in [0, 1]

    Raises:
        RangeError: if an entry lies outside [0, 1]
    """
    matrix = as_square_matrix(similarities)
    check_unit_interval(matrix)

    mapping, mean = max_similarity_mapping(matrix)
    logger.debug("Solved max assignment", order=matrix.shape[0], objective=mean)
    return Assignment(mapping=tuple(int(j) for j in mapping), objective=mean)
