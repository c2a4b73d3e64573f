"""Data models for camera orderings and simulation parameters."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from ..errors import PermutationError


def as_permutation(values: ArrayLike, name: str = "ordering") -> np.ndarray:
    """
    Validate that `values` is a permutation of {0, ..., N-1}.

    Raises:
        PermutationError: naming the first duplicated or out-of-range value
    """
    array = np.asarray(values)
    if array.ndim != 1 or array.size < 1:
        raise PermutationError(f"{name} must be a non-empty 1-D sequence")
    if not np.issubdtype(array.dtype, np.integer):
        if not np.all(np.isfinite(array)) or not np.all(array == np.round(array)):
            raise PermutationError(f"{name} must contain integers")
    array = array.astype(np.intp)
    n = array.size

    out_of_range = np.flatnonzero((array < 0) | (array >= n))
    if out_of_range.size:
        value = int(array[out_of_range[0]])
        raise PermutationError(f"{name} value {value} is outside [0, {n})")

    counts = np.bincount(array, minlength=n)
    duplicated = np.flatnonzero(counts > 1)
    if duplicated.size:
        raise PermutationError(f"{name} value {int(duplicated[0])} appears {int(counts[duplicated[0]])} times")
    return array


@dataclass(frozen=True, eq=False)
class CameraOrdering:
    """
    Appearance order of each vehicle under the two cameras.

    x[i] is vehicle i's position under Camera1 (identity unless given) and
    y[i] its position under Camera2.
    """

    y: np.ndarray
    x: Optional[np.ndarray] = field(default=None)

    def __post_init__(self):
        y = as_permutation(self.y, "y")
        x = np.arange(y.size, dtype=np.intp) if self.x is None else as_permutation(self.x, "x")
        if x.size != y.size:
            raise PermutationError(f"x has {x.size} entries but y has {y.size}")
        y.setflags(write=False)
        x.setflags(write=False)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "x", x)

    @property
    def n_vehicles(self) -> int:
        return int(self.y.size)

    @classmethod
    def identity(cls, n: int) -> "CameraOrdering":
        return cls(y=np.arange(n))

    def gallery_truth(self) -> np.ndarray:
        """True gallery index for each query row (rows are in Camera1 order)."""
        truth = np.empty(self.n_vehicles, dtype=np.intp)
        truth[self.x] = self.y
        return truth


class PerturbationModel(BaseModel):
    """Positional noise s_i ~ Normal(i, scale) applied to Camera2 order."""

    model_config = ConfigDict(frozen=True)

    scale: float = Field(default=0.0, ge=0.0, allow_inf_nan=False)
    seed: int = 0


class SyntheticAppearanceConfig(BaseModel):
    """
    Generative stand-in for a learned similarity network.

    Each vehicle gets a latent vector (optionally an exact copy of an earlier
    vehicle's latent); Camera2 sees it with Gaussian view noise, and
    similarity is a squared-exponential kernel over latent distance.
    """

    model_config = ConfigDict(frozen=True)

    latent_dim: int = Field(default=8, ge=1)
    duplicate_prob: float = Field(default=0.25, ge=0.0, le=1.0)
    view_noise: float = Field(default=0.15, ge=0.0, allow_inf_nan=False)
    kernel_width: float = Field(default=0.5, gt=0.0, allow_inf_nan=False)
    latent_scale: float = Field(default=0.2, gt=0.0, allow_inf_nan=False)
    seed: int = 0
