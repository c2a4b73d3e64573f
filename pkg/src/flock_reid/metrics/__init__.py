"""Re-identification scoring and relative-position metrics."""

from .accuracy import rank1_accuracy, relative_improvement
from .displacement import (
    DisplacementStats,
    FIT_VALIDITY_INTERVAL,
    displacement_stats,
    displacement_variance,
    fit_variance_curve,
    scale_from_variance,
    scale_variance_correlation,
    variance_from_scale_fit,
)
from .dominance import diagonal_dominance, diagonal_hit_rate

__all__ = [
    "DisplacementStats",
    "FIT_VALIDITY_INTERVAL",
    "diagonal_dominance",
    "diagonal_hit_rate",
    "displacement_stats",
    "displacement_variance",
    "fit_variance_curve",
    "rank1_accuracy",
    "relative_improvement",
    "scale_from_variance",
    "scale_variance_correlation",
    "variance_from_scale_fit",
]
