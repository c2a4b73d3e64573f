"""Tests for ordering perturbation, synthetic appearance and id ingestion."""

import itertools

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.stats import spearmanr

from flock_reid.errors import ConfigurationError, IngestionError, PermutationError
from flock_reid.metrics import displacement_variance
from flock_reid.simulate import (
    CameraOrdering,
    PerturbationModel,
    SyntheticAppearanceConfig,
    displacement_curve,
    matrix_from_pairs,
    perturb_ordering,
    synth_similarity,
    trial_seeds,
)


class TestCameraOrdering:
    def test_identity(self):
        ordering = CameraOrdering.identity(4)
        np.testing.assert_array_equal(ordering.x, [0, 1, 2, 3])
        np.testing.assert_array_equal(ordering.y, [0, 1, 2, 3])
        assert ordering.n_vehicles == 4

    def test_duplicate_named(self):
        with pytest.raises(PermutationError, match="value 2 appears 2 times"):
            CameraOrdering(y=[0, 2, 2])

    def test_out_of_range(self):
        with pytest.raises(PermutationError, match="outside"):
            CameraOrdering(y=[0, 3, 1])

    def test_gallery_truth_with_explicit_x(self):
        ordering = CameraOrdering(x=[2, 0, 1], y=[1, 2, 0])
        np.testing.assert_array_equal(ordering.gallery_truth(), [2, 0, 1])

    def test_arrays_are_read_only(self):
        ordering = CameraOrdering.identity(3)
        with pytest.raises(ValueError):
            ordering.y[0] = 2


class TestPerturbOrdering:
    def test_zero_scale_is_identity(self):
        ordering = perturb_ordering(50, PerturbationModel(scale=0.0, seed=3))
        np.testing.assert_array_equal(ordering.y, np.arange(50))

    def test_always_a_permutation_small_n(self):
        for n, seed in itertools.product(range(1, 9), range(200)):
            y = perturb_ordering(n, PerturbationModel(scale=1.5, seed=seed)).y
            assert sorted(y.tolist()) == list(range(n))

    @pytest.mark.parametrize("scale", [0.1, 1.0, 5.0, 50.0])
    def test_permutation_large_n(self, scale):
        y = perturb_ordering(300, PerturbationModel(scale=scale, seed=11)).y
        assert np.array_equal(np.sort(y), np.arange(300))

    def test_deterministic(self):
        model = PerturbationModel(scale=1.0, seed=42)
        np.testing.assert_array_equal(perturb_ordering(100, model).y, perturb_ordering(100, model).y)

    def test_negative_scale_rejected(self):
        with pytest.raises(ValidationError):
            PerturbationModel(scale=-0.5)
        with pytest.raises(ConfigurationError):
            perturb_ordering(10, PerturbationModel.model_construct(scale=-0.5, seed=0))

    def test_zero_vehicles_rejected(self):
        with pytest.raises(ConfigurationError):
            perturb_ordering(0, PerturbationModel())

    def test_variance_grows_with_scale(self):
        scales = [0.25 * i for i in range(1, 9)]
        means = []
        for scale in scales:
            variances = [
                displacement_variance(perturb_ordering(200, PerturbationModel(scale=scale, seed=trial)))
                for trial in range(100)
            ]
            means.append(np.mean(variances))
        assert all(b > a for a, b in zip(means, means[1:]))
        rho, _ = spearmanr(scales, means)
        assert rho >= 0.99


class TestTrialSeeds:
    def test_deterministic_and_distinct(self):
        assert trial_seeds(0, 100, 3) == trial_seeds(0, 100, 3)
        assert trial_seeds(0, 100, 3) != trial_seeds(0, 100, 4)
        assert trial_seeds(0, 100, 3) != trial_seeds(1, 100, 3)
        ordering_seed, appearance_seed = trial_seeds(5, 50, 0)
        assert ordering_seed != appearance_seed

    def test_displacement_curve_monotone(self):
        curve = displacement_curve(200, [0.3, 0.8, 1.3, 1.8], trials=50, seed=1)
        assert np.all(np.diff(curve) > 0)


class TestSynthSimilarity:
    def test_noise_free_true_pairs_are_one(self):
        cfg = SyntheticAppearanceConfig(view_noise=0.0, duplicate_prob=0.0, seed=9)
        ordering = perturb_ordering(40, PerturbationModel(scale=2.0, seed=9))
        matrix = synth_similarity(ordering, cfg)
        true_pairs = matrix[np.arange(40), ordering.y]
        assert np.all(true_pairs == 1.0)
        np.testing.assert_array_equal(np.argmax(matrix, axis=1), ordering.y)

    def test_values_in_unit_interval(self, calibrated):
        matrix = synth_similarity(CameraOrdering.identity(60), calibrated)
        assert np.all(matrix > 0.0)
        assert np.all(matrix <= 1.0)

    def test_columns_follow_camera2_order(self, calibrated):
        ordering = perturb_ordering(30, PerturbationModel(scale=1.5, seed=2))
        perturbed = synth_similarity(ordering, calibrated)
        unchanged = synth_similarity(CameraOrdering.identity(30), calibrated)
        np.testing.assert_array_equal(perturbed[:, ordering.y], unchanged)

    def test_duplicates_create_decoys(self):
        near_ties = 0
        for seed in range(100):
            cfg = SyntheticAppearanceConfig(duplicate_prob=0.3, view_noise=0.15, seed=seed)
            matrix = synth_similarity(CameraOrdering.identity(30), cfg)
            top_two = np.sort(matrix, axis=1)[:, -2:]
            near_ties += int(np.sum(top_two[:, 1] - top_two[:, 0] <= 0.01))
        assert near_ties > 0

    def test_deterministic(self, calibrated):
        ordering = CameraOrdering.identity(25)
        np.testing.assert_array_equal(
            synth_similarity(ordering, calibrated), synth_similarity(ordering, calibrated)
        )

    @pytest.mark.parametrize(
        "field,value",
        [("duplicate_prob", 1.5), ("latent_dim", 0), ("view_noise", -0.1), ("kernel_width", 0.0)],
    )
    def test_config_validation(self, field, value):
        with pytest.raises(ValidationError):
            SyntheticAppearanceConfig(**{field: value})


class TestMatrixFromPairs:
    def test_identical_ids(self):
        ids = ["a", "b", "c"]
        ordering = matrix_from_pairs(ids, ids, np.ones((3, 3)))
        np.testing.assert_array_equal(ordering.y, [0, 1, 2])

    def test_reversed_gallery(self):
        ordering = matrix_from_pairs([1, 2, 3, 4], [4, 3, 2, 1], np.ones((4, 4)))
        np.testing.assert_array_equal(ordering.y, [3, 2, 1, 0])

    def test_recovers_shuffle(self):
        rng = np.random.default_rng(7)
        query_ids = [f"veh{i:03d}" for i in range(50)]
        shuffle = rng.permutation(50)
        gallery_ids = [None] * 50
        for i, position in enumerate(shuffle):
            gallery_ids[position] = query_ids[i]
        ordering = matrix_from_pairs(query_ids, gallery_ids, np.ones((50, 50)))
        np.testing.assert_array_equal(ordering.y, shuffle)

    def test_mismatched_id_named(self):
        with pytest.raises(IngestionError, match="'zz'"):
            matrix_from_pairs(["a", "zz"], ["a", "b"], np.ones((2, 2)))

    def test_duplicate_id(self):
        with pytest.raises(IngestionError, match="Duplicate"):
            matrix_from_pairs(["a", "a"], ["a", "b"], np.ones((2, 2)))

    def test_length_mismatch(self):
        with pytest.raises(IngestionError):
            matrix_from_pairs(["a", "b"], ["a"], np.ones((2, 1)))

    def test_shape_mismatch(self):
        with pytest.raises(IngestionError, match="shape"):
            matrix_from_pairs(["a", "b"], ["b", "a"], np.ones((3, 3)))
