"""Rank-1 scoring."""

import numpy as np
from numpy.typing import ArrayLike

from ..errors import ConfigurationError, MatrixValidationError
from ..simulate.models import CameraOrdering


def rank1_accuracy(truth: CameraOrdering, pred: ArrayLike) -> float:
    """
    Fraction of queries whose predicted gallery index is the true one.

    Predictions may repeat; no de-duplication is applied.

    Args:
        truth: ground-truth ordering of the scene
        pred: predicted gallery index per query, in query order

    Raises:
        MatrixValidationError: on a length mismatch or an index outside the gallery
    """
    predicted = np.asarray(pred)
    expected = truth.gallery_truth()
    if predicted.ndim != 1 or predicted.size != expected.size:
        raise MatrixValidationError(
            f"Prediction length {predicted.size} does not match {expected.size} queries"
        )
    if np.any((predicted < 0) | (predicted >= expected.size)):
        raise MatrixValidationError("Prediction contains an index outside the gallery")
    return float(np.count_nonzero(predicted == expected)) / expected.size


def relative_improvement(flock_accuracy: float, individual_accuracy: float) -> float:
    """(flock - individual) / individual."""
    if individual_accuracy <= 0:
        raise ConfigurationError("Relative improvement undefined for zero individual accuracy")
    return (flock_accuracy - individual_accuracy) / individual_accuracy
