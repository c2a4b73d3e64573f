"""Ground truth from externally computed matrices."""

from typing import Hashable, Sequence

import numpy as np
from numpy.typing import ArrayLike

from ..errors import IngestionError
from .models import CameraOrdering


def _index_ids(ids: Sequence[Hashable], label: str) -> dict:
    positions = {}
    for position, item in enumerate(ids):
        if item in positions:
            raise IngestionError(f"Duplicate {label} id {item!r} at positions {positions[item]} and {position}")
        positions[item] = position
    return positions


def matrix_from_pairs(
    query_ids: Sequence[Hashable],
    gallery_ids: Sequence[Hashable],
    p: ArrayLike,
) -> CameraOrdering:
    """
    Derive the ground-truth ordering from id correspondence.

    Query row i and gallery column y_i must carry the same id.
    """
    if len(query_ids) != len(gallery_ids):
        raise IngestionError(f"{len(query_ids)} query ids but {len(gallery_ids)} gallery ids")

    shape = np.shape(p)
    if shape != (len(query_ids), len(gallery_ids)):
        raise IngestionError(
            f"Similarity matrix shape {shape} does not match {len(query_ids)}x{len(gallery_ids)} ids"
        )

    query_pos = _index_ids(query_ids, "query")
    gallery_pos = _index_ids(gallery_ids, "gallery")

    for item in query_ids:
        if item not in gallery_pos:
            raise IngestionError(f"Query id {item!r} has no gallery counterpart")
    for item in gallery_ids:
        if item not in query_pos:
            raise IngestionError(f"Gallery id {item!r} has no query counterpart")

    y = np.array([gallery_pos[item] for item in query_ids], dtype=np.intp)
    return CameraOrdering(y=y)
