"""Synthetic individual similarity."""

from typing import Tuple

import numpy as np
import structlog
from scipy.spatial.distance import cdist

from .models import CameraOrdering, SyntheticAppearanceConfig

logger = structlog.get_logger()

# smallest positive normal float; keeps kernel values strictly above zero
_FLOOR = np.finfo(np.float64).tiny


def _draw_latents(
    n: int, cfg: SyntheticAppearanceConfig, rng: np.random.Generator
) -> Tuple[np.ndarray, int]:
    """Latent appearance per vehicle; a clone copies a uniformly chosen earlier vehicle exactly."""
    latents = rng.normal(0.0, cfg.latent_scale, size=(n, cfg.latent_dim))
    clone = rng.random(n) < cfg.duplicate_prob
    clone[0] = False
    picks = rng.random(n)
    for i in np.flatnonzero(clone):
        latents[i] = latents[int(picks[i] * i)]
    return latents, int(clone.sum())


def synth_similarity(ordering: CameraOrdering, cfg: SyntheticAppearanceConfig) -> np.ndarray:
    """
    Similarity matrix for an ordering: rows in Camera1 order, columns in Camera2 order.

    p_ij = exp(-||a_i - a~_j||^2 / (2 tau^2)) where a~ is the Camera2 view of
    the vehicle placed at gallery column j.
    """
    rng = np.random.default_rng(cfg.seed)
    n = ordering.n_vehicles
    latents, n_clones = _draw_latents(n, cfg, rng)
    observed = latents + rng.normal(0.0, cfg.view_noise, size=latents.shape)

    query = np.empty_like(latents)
    query[ordering.x] = latents
    gallery = np.empty_like(observed)
    gallery[ordering.y] = observed

    distances = cdist(query, gallery, metric="sqeuclidean")
    similarity = np.exp(-distances / (2.0 * cfg.kernel_width**2))
    np.maximum(similarity, _FLOOR, out=similarity)

    logger.debug(
        "Synthesized similarity",
        n=n,
        clones=n_clones,
        seed=cfg.seed,
    )
    return similarity
