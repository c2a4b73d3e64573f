"""Shared fixtures."""

from pathlib import Path

import numpy as np
import pytest

from flock_reid.simulate.models import SyntheticAppearanceConfig

FIXTURES = Path(__file__).parent / "fixtures"

DECOY_TARGET = 4


def decoy_matrix() -> np.ndarray:
    """Nine vehicles in unchanged order; query 4 has decoys at gallery 0 and 8."""
    matrix = np.full((9, 9), 0.1)
    np.fill_diagonal(matrix, 0.8)
    matrix[DECOY_TARGET, 0] = 0.85
    matrix[DECOY_TARGET, 8] = 0.9
    return matrix


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def decoy() -> np.ndarray:
    return decoy_matrix()


@pytest.fixture
def calibrated() -> SyntheticAppearanceConfig:
    """Pinned calibration from config/experiment.yaml."""
    return SyntheticAppearanceConfig(
        latent_dim=8,
        duplicate_prob=0.25,
        view_noise=0.15,
        kernel_width=0.5,
        latent_scale=0.2,
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240101)
