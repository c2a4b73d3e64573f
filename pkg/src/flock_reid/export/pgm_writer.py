"""Grayscale heatmaps as ASCII PGM (P2, maxval 255).

Darker pixels mean higher similarity: pixel = round(255 * (1 - value)).
"""

from pathlib import Path
from typing import Union

import numpy as np
import structlog
from numpy.typing import ArrayLike

from ..errors import IngestionError
from ..flock.similarity import as_similarity_matrix
from .atomic import atomic_writer

logger = structlog.get_logger()

MAXVAL = 255


def heatmap_pixels(values: ArrayLike) -> np.ndarray:
    """Map similarities in [0, 1] to 8-bit gray levels (half-up rounding)."""
    matrix = as_similarity_matrix(values)
    return np.floor(MAXVAL * (1.0 - matrix) + 0.5).astype(np.uint8)


def write_pgm(values: ArrayLike, output_path: Union[str, Path]) -> np.ndarray:
    """Write a row-major P2 image, one image row per text line; returns the pixels."""
    pixels = heatmap_pixels(values)
    height, width = pixels.shape
    with atomic_writer(Path(output_path)) as f:
        f.write(f"P2\n{width} {height}\n{MAXVAL}\n")
        for row in pixels:
            f.write(" ".join(str(int(p)) for p in row))
            f.write("\n")
    logger.info("Wrote heatmap", width=width, height=height, path=str(output_path))
    return pixels


def read_pgm(path: Union[str, Path]) -> np.ndarray:
    """Read a P2 image back into a (height, width) integer array."""
    path = Path(path)
    tokens = []
    try:
        with open(path, encoding="utf-8") as f:
            for line in f:
                tokens.extend(line.split("#", 1)[0].split())
    except OSError as e:
        raise IngestionError(f"Cannot open file: {e.strerror}", path=path) from e
    if len(tokens) < 4 or tokens[0] != "P2":
        raise IngestionError("Not an ASCII PGM (P2) file", path=path)
    width, height, maxval = (int(t) for t in tokens[1:4])
    data = np.array([int(t) for t in tokens[4:]], dtype=np.int64)
    if data.size != width * height:
        raise IngestionError(f"Expected {width * height} pixels, found {data.size}", path=path)
    if np.any((data < 0) | (data > maxval)):
        raise IngestionError(f"Pixel outside [0, {maxval}]", path=path)
    return data.reshape(height, width)
