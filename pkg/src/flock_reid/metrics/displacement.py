"""Relative-position change metrics.

Two views of how much vehicles reorder between the cameras: the variance of
the (x_i, y_i) scatter around y = x, and the scale of the positional noise
that produced it. A published quadratic links them over the scale interval
FIT_VALIDITY_INTERVAL; outside it the fit is extrapolation.
"""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy.stats import spearmanr

from ..errors import ConfigurationError
from ..simulate.models import CameraOrdering

# variance ~ a*scale^2 + b*scale + c
FIT_QUADRATIC = (0.4827, 0.01875, -0.0275)

# scale ~ A*sqrt(B + C*variance) + D
INVERSE_FIT = (1.036, 0.0534, 1.93, -0.0194)

FIT_VALIDITY_INTERVAL = (0.3, 2.0)


@dataclass(frozen=True)
class DisplacementStats:
    variance: float
    recovered_scale: float


def displacement_variance(ordering: CameraOrdering) -> float:
    """var = (1 / 2n) * sum_i (x_i - y_i)^2, evaluated exactly in integers."""
    diff = ordering.x.astype(np.int64) - ordering.y.astype(np.int64)
    return int(np.dot(diff, diff)) / (2 * ordering.n_vehicles)


def scale_from_variance(var: float) -> float:
    """Recover the noise scale from an observed displacement variance."""
    if var < 0 or not math.isfinite(var):
        raise ConfigurationError(f"Variance must be a non-negative finite number, got {var}")
    a, b, c, d = INVERSE_FIT
    return a * math.sqrt(b + c * var) + d


def variance_from_scale_fit(scale: float) -> float:
    """Raw quadratic fit; negative near zero, meaningful on FIT_VALIDITY_INTERVAL."""
    if scale < 0:
        raise ConfigurationError(f"Scale must be non-negative, got {scale}")
    a, b, c = FIT_QUADRATIC
    return a * scale**2 + b * scale + c


def displacement_stats(ordering: CameraOrdering) -> DisplacementStats:
    variance = displacement_variance(ordering)
    return DisplacementStats(variance=variance, recovered_scale=scale_from_variance(variance))


def fit_variance_curve(scales: Sequence[float], variances: Sequence[float]) -> Tuple[float, float, float]:
    """Least-squares quadratic (a, b, c) of variance against scale."""
    if len(scales) != len(variances) or len(scales) < 3:
        raise ConfigurationError("Quadratic fit needs at least 3 matching (scale, variance) points")
    a, b, c = np.polyfit(np.asarray(scales, dtype=float), np.asarray(variances, dtype=float), deg=2)
    return float(a), float(b), float(c)


def scale_variance_correlation(scales: Sequence[float], variances: Sequence[float]) -> float:
    """Spearman rank correlation between the scale grid and observed variances."""
    if len(scales) != len(variances) or len(scales) < 2:
        raise ConfigurationError("Correlation needs at least 2 matching points")
    rho, _ = spearmanr(scales, variances)
    return float(rho)
