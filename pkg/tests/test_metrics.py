"""Tests for rank-1 scoring, displacement metrics and diagonal dominance."""

import numpy as np
import pytest

from flock_reid.errors import ConfigurationError, MatrixValidationError
from flock_reid.metrics import (
    FIT_VALIDITY_INTERVAL,
    diagonal_dominance,
    diagonal_hit_rate,
    displacement_stats,
    displacement_variance,
    fit_variance_curve,
    rank1_accuracy,
    relative_improvement,
    scale_from_variance,
    scale_variance_correlation,
    variance_from_scale_fit,
)
from flock_reid.simulate import CameraOrdering


class TestDisplacementVariance:
    def test_identity_is_zero(self):
        assert displacement_variance(CameraOrdering.identity(10)) == 0.0

    def test_adjacent_swap(self):
        assert displacement_variance(CameraOrdering(y=[1, 0])) == 0.5

    def test_reversal(self):
        assert displacement_variance(CameraOrdering(y=[3, 2, 1, 0])) == 2.5

    def test_symmetric_in_cameras(self, rng):
        for _ in range(50):
            x = rng.permutation(30)
            y = rng.permutation(30)
            assert displacement_variance(CameraOrdering(x=x, y=y)) == displacement_variance(
                CameraOrdering(x=y, y=x)
            )

    def test_stats_bundle(self):
        stats = displacement_stats(CameraOrdering(y=[3, 2, 1, 0]))
        assert stats.variance == 2.5
        assert stats.recovered_scale == pytest.approx(scale_from_variance(2.5))


class TestScaleFits:
    def test_zero_variance(self):
        assert scale_from_variance(0.0) == pytest.approx(0.2200, abs=1e-4)

    def test_fit_values(self):
        assert variance_from_scale_fit(1.0) == pytest.approx(0.47395)
        assert variance_from_scale_fit(0.0) == pytest.approx(-0.0275)
        assert variance_from_scale_fit(2.0) == pytest.approx(1.9408)

    def test_round_trip_on_validity_interval(self):
        low, high = FIT_VALIDITY_INTERVAL
        for scale in np.linspace(low, high, 35):
            assert abs(scale_from_variance(variance_from_scale_fit(scale)) - scale) <= 0.005

    def test_inverse_is_increasing(self):
        values = [scale_from_variance(v) for v in np.linspace(0.0, 5.0, 51)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_rejects_negative(self):
        with pytest.raises(ConfigurationError):
            scale_from_variance(-0.1)
        with pytest.raises(ConfigurationError):
            variance_from_scale_fit(-1.0)

    def test_fit_variance_curve_recovers_quadratic(self):
        scales = np.linspace(0.3, 2.0, 10)
        variances = 0.5 * scales**2 + 0.02 * scales - 0.03
        a, b, c = fit_variance_curve(scales, variances)
        assert (a, b, c) == pytest.approx((0.5, 0.02, -0.03), abs=1e-9)

    def test_fit_variance_curve_needs_three_points(self):
        with pytest.raises(ConfigurationError):
            fit_variance_curve([0.5, 1.0], [0.1, 0.4])

    def test_correlation_of_monotone_curve(self):
        assert scale_variance_correlation([0.3, 0.6, 0.9], [0.02, 0.16, 0.4]) == pytest.approx(1.0)


class TestRank1Accuracy:
    def test_perfect(self):
        ordering = CameraOrdering(y=[2, 0, 1])
        assert rank1_accuracy(ordering, [2, 0, 1]) == 1.0

    def test_all_wrong(self):
        assert rank1_accuracy(CameraOrdering.identity(3), [1, 2, 0]) == 0.0

    def test_repeated_predictions_are_counted(self):
        assert rank1_accuracy(CameraOrdering.identity(4), [0, 1, 2, 0]) == 0.75

    def test_length_mismatch(self):
        with pytest.raises(MatrixValidationError):
            rank1_accuracy(CameraOrdering.identity(4), [0, 1, 2])

    def test_out_of_range(self):
        with pytest.raises(MatrixValidationError):
            rank1_accuracy(CameraOrdering.identity(3), [0, 1, 3])

    def test_relative_improvement(self):
        assert relative_improvement(0.9, 0.3) == pytest.approx(2.0)
        with pytest.raises(ConfigurationError):
            relative_improvement(0.5, 0.0)


class TestDiagonalDominance:
    def test_dominant_grid(self):
        assert diagonal_dominance([[2.0, 1.0], [1.0, 2.0]]) == 2.0

    def test_uniform_grid(self):
        assert diagonal_dominance(np.ones((5, 5))) == 1.0

    def test_single_cell_rejected(self):
        with pytest.raises(MatrixValidationError):
            diagonal_dominance([[0.7]])

    def test_rectangular_rejected(self):
        with pytest.raises(MatrixValidationError):
            diagonal_dominance(np.ones((2, 3)))

    def test_zero_off_diagonal_rejected(self):
        with pytest.raises(MatrixValidationError):
            diagonal_dominance(np.eye(3))


class TestDiagonalHitRate:
    def test_diagonal_maxima(self):
        assert diagonal_hit_rate([[0.9, 0.2, 0.1], [0.3, 0.8, 0.1], [0.0, 0.5, 0.6]]) == 1.0

    def test_single_cell(self):
        assert diagonal_hit_rate([[0.7]]) == 1.0

    def test_ties_go_to_first_column(self):
        assert diagonal_hit_rate(np.full((4, 4), 0.3)) == 0.25

    def test_ignores_off_diagonal_level(self):
        grid = np.full((3, 3), 0.6)
        np.fill_diagonal(grid, 0.61)
        assert diagonal_hit_rate(grid) == 1.0
        assert diagonal_dominance(grid) < 1.02

    @pytest.mark.parametrize("shape", [(2, 3), (0, 0), (4,)])
    def test_non_square_rejected(self, shape):
        with pytest.raises(MatrixValidationError):
            diagonal_hit_rate(np.ones(shape))
