"""Flock construction and flock similarity."""

from .similarity import (
    FlockMatch,
    as_similarity_matrix,
    best_gallery_flock,
    flock_similarity,
    flock_similarity_grid,
    match_all_targets,
    match_target,
)
from .windows import FlockWindow, check_flock_size, query_windows

__all__ = [
    "FlockMatch",
    "FlockWindow",
    "as_similarity_matrix",
    "best_gallery_flock",
    "check_flock_size",
    "flock_similarity",
    "flock_similarity_grid",
    "match_all_targets",
    "match_target",
    "query_windows",
]
