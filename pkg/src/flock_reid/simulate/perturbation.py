"""Relative-position perturbation between the two cameras."""

from typing import Sequence, Tuple

import numpy as np
import structlog

from ..errors import ConfigurationError
from .models import CameraOrdering, PerturbationModel

logger = structlog.get_logger()


def perturb_ordering(n: int, model: PerturbationModel) -> CameraOrdering:
    """
    Sample a Camera2 ordering.

    Draws s'_i ~ Normal(i, scale) independently, sorts them (stable on ties)
    and sets y_i to vehicle i's rank. scale = 0 yields the identity.

    Args:
        n: number of vehicles
        model: noise scale and seed

    Raises:
        ConfigurationError: if n < 1 or the scale is negative
    """
    if n < 1:
        raise ConfigurationError(f"Number of vehicles must be at least 1, got {n}")
    if model.scale < 0:
        raise ConfigurationError(f"Perturbation scale must be non-negative, got {model.scale}")

    rng = np.random.default_rng(model.seed)
    samples = np.arange(n, dtype=np.float64) + model.scale * rng.standard_normal(n)
    order = np.argsort(samples, kind="stable")
    y = np.empty(n, dtype=np.intp)
    y[order] = np.arange(n)
    return CameraOrdering(y=y)


def trial_seeds(seed: int, n: int, trial: int) -> Tuple[int, int]:
    """
    Derive (ordering_seed, appearance_seed) for one sweep trial.

    The pair depends only on (seed, n, trial), never on the scale, so every
    scale of a sweep reuses the same appearance draw and the same underlying
    positional noise.
    """
    children = np.random.SeedSequence([seed, n, trial]).spawn(2)
    ordering_seed, appearance_seed = (int(child.generate_state(1)[0]) for child in children)
    return ordering_seed, appearance_seed


def displacement_curve(n: int, scales: Sequence[float], trials: int, seed: int = 0) -> np.ndarray:
    """Mean displacement variance at each scale over `trials` sampled orderings."""
    from ..metrics.displacement import displacement_variance

    if trials < 1:
        raise ConfigurationError(f"Trials must be at least 1, got {trials}")

    means = np.empty(len(scales), dtype=np.float64)
    for idx, scale in enumerate(scales):
        total = 0.0
        for trial in range(trials):
            ordering_seed, _ = trial_seeds(seed, n, trial)
            ordering = perturb_ordering(n, PerturbationModel(scale=scale, seed=ordering_seed))
            total += displacement_variance(ordering)
        means[idx] = total / trials
        logger.debug("Displacement curve point", n=n, scale=scale, mean_variance=means[idx])
    return means
