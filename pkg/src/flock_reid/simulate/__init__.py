"""Camera orderings, perturbation and synthetic appearance."""

from .appearance import synth_similarity
from .ingest import matrix_from_pairs
from .models import CameraOrdering, PerturbationModel, SyntheticAppearanceConfig
from .perturbation import displacement_curve, perturb_ordering, trial_seeds

__all__ = [
    "CameraOrdering",
    "PerturbationModel",
    "SyntheticAppearanceConfig",
    "displacement_curve",
    "matrix_from_pairs",
    "perturb_ordering",
    "synth_similarity",
    "trial_seeds",
]
