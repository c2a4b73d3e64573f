"""Exact assignment solvers."""

from .brute_force import Sense, brute_force_assignment
from .solver import Assignment, as_square_matrix, solve_max_assignment, solve_min_assignment

__all__ = [
    "Assignment",
    "Sense",
    "as_square_matrix",
    "brute_force_assignment",
    "solve_max_assignment",
    "solve_min_assignment",
]
