"""File ingestion."""

from .readers import read_ordering, read_similarity_matrix

__all__ = ["read_ordering", "read_similarity_matrix"]
