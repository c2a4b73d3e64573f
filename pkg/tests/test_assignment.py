"""Tests for the assignment solvers and the brute-force oracle."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays
from scipy.optimize import linear_sum_assignment

from flock_reid.assignment import (
    Sense,
    brute_force_assignment,
    solve_max_assignment,
    solve_min_assignment,
)
from flock_reid.errors import MatrixValidationError, OracleSizeError, RangeError


def _is_permutation(mapping, n):
    return sorted(mapping) == list(range(n))


@st.composite
def square_matrices(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    return draw(arrays(np.float64, (n, n), elements=st.floats(0.0, 1.0)))


class TestSolveMinAssignment:
    def test_single_element(self):
        result = solve_min_assignment([[0.0]])
        assert result.mapping == (0,)
        assert result.objective == 0.0

    def test_two_by_two_takes_off_diagonal(self):
        result = solve_min_assignment([[1, 2], [2, 4]])
        assert result.mapping == (1, 0)
        assert result.objective == 4

    def test_six_by_six_matches_enumeration(self, rng):
        costs = rng.random((6, 6))
        assert solve_min_assignment(costs).objective == pytest.approx(
            brute_force_assignment(costs, Sense.MIN).objective, abs=1e-12
        )

    @pytest.mark.parametrize(
        "costs",
        [
            [[0.5, -0.1], [0.2, 0.3]],
            [[np.nan, 0.1], [0.2, 0.3]],
            [[np.inf, 0.1], [0.2, 0.3]],
            [[0.1, 0.2, 0.3], [0.4, 0.5, 0.6]],
            np.empty((0, 0)),
            [0.1, 0.2],
        ],
        ids=["negative", "nan", "inf", "non-square", "empty", "1-d"],
    )
    def test_rejects_invalid(self, costs):
        with pytest.raises(MatrixValidationError):
            solve_min_assignment(costs)

    def test_large_matrix_is_a_permutation(self, rng):
        costs = rng.random((500, 500))
        result = solve_min_assignment(costs)
        assert _is_permutation(result.mapping, 500)
        rows, cols = linear_sum_assignment(costs)
        assert result.objective == pytest.approx(costs[rows, cols].sum(), abs=1e-9)


class TestSolveMaxAssignment:
    def test_two_by_two_mean(self):
        result = solve_max_assignment([[0.9, 0.2], [0.3, 0.8]])
        assert result.mapping == (0, 1)
        assert result.objective == pytest.approx(0.85, abs=1e-12)

    def test_identity_similarity_scores_one(self):
        matrix = np.full((5, 5), 0.4)
        np.fill_diagonal(matrix, 1.0)
        result = solve_max_assignment(matrix)
        assert result.mapping == (0, 1, 2, 3, 4)
        assert result.objective == 1.0

    def test_matches_enumeration(self, rng):
        matrix = rng.random((5, 5))
        assert solve_max_assignment(matrix).objective == pytest.approx(
            brute_force_assignment(matrix, Sense.MAX).objective, abs=1e-12
        )

    @pytest.mark.parametrize("bad", [1.2, -0.01])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(RangeError):
            solve_max_assignment([[0.5, bad], [0.2, 0.3]])


class TestBruteForce:
    def test_single_element(self):
        assert brute_force_assignment([[0.0]]).mapping == (0,)

    def test_two_by_two_min(self):
        assert brute_force_assignment([[1, 2], [2, 4]], "min").objective == 4

    def test_seven_by_seven_max_equals_solver(self, rng):
        matrix = rng.random((7, 7))
        assert brute_force_assignment(matrix, Sense.MAX).objective == pytest.approx(
            solve_max_assignment(matrix).objective, abs=1e-12
        )

    def test_refuses_above_cap(self):
        with pytest.raises(OracleSizeError):
            brute_force_assignment(np.zeros((10, 10)))

    def test_custom_cap(self):
        with pytest.raises(OracleSizeError):
            brute_force_assignment(np.zeros((4, 4)), cap=3)

    def test_cap_never_exceeds_ceiling(self):
        with pytest.raises(OracleSizeError, match="oracle cap 10"):
            brute_force_assignment(np.zeros((11, 11)), cap=12)


class TestProperties:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_oracle_equivalence(self, n):
        rng = np.random.default_rng(1000 + n)
        for _ in range(1000):
            costs = rng.random((n, n))
            solved = solve_min_assignment(costs)
            oracle = brute_force_assignment(costs, Sense.MIN)
            assert abs(solved.objective - oracle.objective) <= 1e-12

    @given(square_matrices(max_n=12))
    @settings(max_examples=200, deadline=None)
    def test_duality_of_senses(self, matrix):
        n = matrix.shape[0]
        maximum = solve_max_assignment(matrix).objective
        minimum = solve_min_assignment(1.0 - matrix).objective
        assert maximum == pytest.approx(1.0 - minimum / n, abs=1e-12)

    @given(square_matrices(max_n=30))
    @settings(max_examples=200, deadline=None)
    def test_mappings_are_bijections(self, matrix):
        n = matrix.shape[0]
        assert _is_permutation(solve_min_assignment(matrix).mapping, n)
        assert _is_permutation(solve_max_assignment(matrix).mapping, n)

    @given(square_matrices(max_n=8), st.data(), st.floats(0.0, 3.0))
    @settings(max_examples=200, deadline=None)
    def test_row_shift_adds_constant(self, costs, data, shift):
        row = data.draw(st.integers(0, costs.shape[0] - 1))
        shifted = costs.copy()
        shifted[row] += shift
        assert solve_min_assignment(shifted).objective == pytest.approx(
            solve_min_assignment(costs).objective + shift, abs=1e-12
        )

    @given(square_matrices(max_n=7))
    @settings(max_examples=200, deadline=None)
    def test_max_agrees_with_oracle(self, matrix):
        assert solve_max_assignment(matrix).objective == pytest.approx(
            brute_force_assignment(matrix, Sense.MAX).objective, abs=1e-12
        )

    def test_ties_compare_objectives_only(self):
        costs = np.ones((4, 4))
        result = solve_min_assignment(costs)
        assert _is_permutation(result.mapping, 4)
        assert result.objective == 4.0
