"""Flock similarity and gallery search.

Flock similarity between two equal-size flocks is the best mean individual
similarity over all one-to-one pairings of their members.
"""

from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np
import structlog
from numpy.typing import ArrayLike

from ..assignment.solver import as_square_matrix, check_unit_interval, max_similarity_mapping
from ..errors import MatrixValidationError
from .windows import FlockWindow, check_flock_size, query_windows

logger = structlog.get_logger()


@dataclass(frozen=True)
class FlockMatch:
    """Result of comparing two flocks.

    pairing[i] is the offset (inside flock B) matched to member i of flock A.
    target_match is filled once the match is placed in a gallery.
    """

    similarity: float
    pairing: Tuple[int, ...]
    target_match: Optional[int] = None


def as_similarity_matrix(values: ArrayLike) -> np.ndarray:
    """Validate a rectangular query x gallery similarity matrix with entries in [0, 1]."""
    try:
        matrix = np.asarray(values, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise MatrixValidationError(f"Similarity matrix is not numeric: {e}") from e
    if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
        raise MatrixValidationError(f"Similarity matrix must be non-empty 2-D, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise MatrixValidationError("Similarity matrix contains NaN or infinite entries")
    check_unit_interval(matrix)
    return matrix


def _match_block(block: np.ndarray) -> FlockMatch:
    mapping, mean = max_similarity_mapping(block)
    return FlockMatch(similarity=mean, pairing=tuple(int(j) for j in mapping))


def flock_similarity(p_block: ArrayLike) -> FlockMatch:
    """
    Flock similarity of a k x k block (rows: flock A, columns: flock B).

    For k = 1 this is the individual similarity itself.
    """
    block = as_square_matrix(p_block)
    check_unit_interval(block)
    return _match_block(block)


def _scan_gallery(matrix: np.ndarray, query_window: FlockWindow, k: int) -> Tuple[FlockWindow, FlockMatch]:
    """Unchecked gallery scan over an already validated matrix."""
    rows = matrix[query_window.as_slice()]
    best_start = -1
    best_match: Optional[FlockMatch] = None
    for start in range(matrix.shape[1] - k + 1):
        candidate = _match_block(rows[:, start : start + k])
        if best_match is None or candidate.similarity > best_match.similarity:
            best_start, best_match = start, candidate

    assert best_match is not None
    offset = best_match.pairing[query_window.target_offset]
    window = FlockWindow(start=best_start, size=k, target_offset=offset)
    return window, replace(best_match, target_match=best_start + offset)


def best_gallery_flock(
    similarity: ArrayLike,
    query_window: FlockWindow,
    k: Optional[int] = None,
) -> Tuple[FlockWindow, FlockMatch]:
    """
    Scan every contiguous gallery window of size k and keep the best flock.

    Evaluates exactly M - k + 1 candidates; ties go to the smallest start.
    The returned gallery window's target_offset marks the member paired with
    the query target, and the match carries its absolute gallery index.

    Args:
        similarity: query x gallery matrix with entries in [0, 1]
        query_window: flock of query rows around the target
        k: flock size; defaults to the query window's size

    Raises:
        MatrixValidationError: if k disagrees with the window or the window
            runs past the query rows
        ConfigurationError: if k is even or longer than the gallery
    """
    matrix = as_similarity_matrix(similarity)
    k = query_window.size if k is None else k
    if k != query_window.size:
        raise MatrixValidationError(f"Flock size {k} does not match query window size {query_window.size}")
    check_flock_size(k, matrix.shape[1])
    if query_window.stop > matrix.shape[0]:
        raise MatrixValidationError(
            f"Query window [{query_window.start}, {query_window.stop}) exceeds {matrix.shape[0]} query rows"
        )
    return _scan_gallery(matrix, query_window, k)


def _match_target(matrix: np.ndarray, target: int, k: int) -> int:
    window = query_windows(matrix.shape[0], target, k)
    _, match = _scan_gallery(matrix, window, k)
    return int(match.target_match)


def match_target(similarity: ArrayLike, target: int, k: int) -> int:
    """
    Gallery index paired with `target` inside the best flock around it.

    Args:
        similarity: query x gallery matrix with entries in [0, 1]
        target: query row index
        k: odd flock size, at most min(N, M)
    """
    matrix = as_similarity_matrix(similarity)
    check_flock_size(k, min(matrix.shape))
    return _match_target(matrix, target, k)


def match_all_targets(similarity: ArrayLike, k: int) -> np.ndarray:
    """
    match_target for every query row, validating the matrix once.

    Each query is matched independently, so two queries may claim the same
    gallery index.
    """
    matrix = as_similarity_matrix(similarity)
    check_flock_size(k, min(matrix.shape))
    return np.fromiter(
        (_match_target(matrix, target, k) for target in range(matrix.shape[0])),
        dtype=np.intp,
        count=matrix.shape[0],
    )


def flock_similarity_grid(similarity: ArrayLike, k: int) -> np.ndarray:
    """
    Flock similarity between every query window and every gallery window.

    Entry (a, b) compares the query flock starting at a with the gallery
    flock starting at b; shape (N - k + 1, M - k + 1). k = 1 returns the
    matrix unchanged.
    """
    matrix = as_similarity_matrix(similarity)
    n_query, n_gallery = matrix.shape
    check_flock_size(k, min(n_query, n_gallery))
    if k == 1:
        return matrix.copy()

    grid = np.empty((n_query - k + 1, n_gallery - k + 1), dtype=np.float64)
    for a in range(grid.shape[0]):
        rows = matrix[a : a + k]
        for b in range(grid.shape[1]):
            grid[a, b] = _match_block(rows[:, b : b + k]).similarity

    logger.debug("Computed flock similarity grid", k=k, shape=grid.shape)
    return grid
