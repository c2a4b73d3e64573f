"""Exception hierarchy for Flock ReID."""

from pathlib import Path
from typing import Optional, Union


class FlockReidError(Exception):
    """Base class for all library errors; the CLI maps these to exit code 2."""


class MatrixValidationError(FlockReidError, ValueError):
    """Matrix is empty, non-square where required, or holds non-finite/negative entries."""


class RangeError(MatrixValidationError):
    """Similarity value outside [0, 1]."""


class OracleSizeError(FlockReidError, ValueError):
    """Exhaustive enumeration requested above the configured cap."""


class ConfigurationError(FlockReidError, ValueError):
    """Invalid flock size, window, experiment grid or appearance config."""


class PermutationError(FlockReidError, ValueError):
    """Sequence is not a permutation of {0, ..., N-1}."""


class IngestionError(FlockReidError):
    """Input file or id sequence could not be ingested."""

    def __init__(
        self,
        message: str,
        path: Optional[Union[str, Path]] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.path = str(path) if path is not None else None
        self.line = line
        self.column = column
        location = ""
        if self.path is not None:
            location = self.path
            if line is not None:
                location += f":{line}"
                if column is not None:
                    location += f":{column}"
            location += ": "
        super().__init__(f"{location}{message}")


class SweepCellError(FlockReidError):
    """A sweep cell failed; carries the (n, scale, trial) key."""

    def __init__(self, n: int, scale: float, trial: int, cause: BaseException):
        self.n = n
        self.scale = scale
        self.trial = trial
        self.cause = cause
        super().__init__(f"Sweep cell n={n} scale={scale:g} trial={trial} failed: {cause}")


class ExportError(FlockReidError):
    """Output file could not be written."""

    def __init__(self, message: str, path: Union[str, Path]):
        self.path = str(path)
        super().__init__(f"{self.path}: {message}")
