"""Flock ReID - flock-similarity vehicle re-identification over ordered camera galleries."""

__version__ = "0.1.0"
