"""Experiment configuration (config/experiment.yaml)."""

import math
import re
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import List

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..errors import ConfigurationError
from ..simulate.models import SyntheticAppearanceConfig

_GRID_PATTERN = re.compile(r"^\s*(?P<start>[^:]+?)\.\.(?P<end>[^:]+):(?P<step>[^:]+?)\s*$")


def _decimal(text: str, what: str) -> Decimal:
    try:
        value = Decimal(text.strip())
    except InvalidOperation as e:
        raise ConfigurationError(f"Invalid {what} {text.strip()!r}") from e
    if not value.is_finite():
        raise ConfigurationError(f"Invalid {what} {text.strip()!r}")
    return value


def parse_scale_grid(text: str) -> List[float]:
    """
    Parse a scale grid.

    Accepts "start..end:step" (inclusive of end when step divides the range)
    or a comma-separated list such as "0,0.5,1". Decimal arithmetic keeps
    "0..2:0.25" exact.
    """
    match = _GRID_PATTERN.match(text)
    if match is None:
        values = [float(_decimal(part, "scale")) for part in text.split(",") if part.strip()]
        if not values:
            raise ConfigurationError(f"Empty scale grid {text!r}")
        return values

    start = _decimal(match["start"], "grid start")
    end = _decimal(match["end"], "grid end")
    step = _decimal(match["step"], "grid step")
    if step <= 0:
        raise ConfigurationError(f"Grid step must be positive, got {step}")
    if end < start:
        raise ConfigurationError(f"Grid end {end} is below start {start}")

    count = int((end - start) / step)
    return [float(start + i * step) for i in range(count + 1)]


def parse_int_list(text: str, what: str = "value") -> List[int]:
    """Parse "50,100,200"."""
    values = []
    for part in text.split(","):
        if not part.strip():
            continue
        try:
            values.append(int(part))
        except ValueError as e:
            raise ConfigurationError(f"Invalid {what} {part.strip()!r}") from e
    if not values:
        raise ConfigurationError(f"No {what}s given in {text!r}")
    return values


class ExperimentConfig(BaseModel):
    """Sweep grid: every (N, scale, trial) cell is scored at every flock size."""

    model_config = ConfigDict(frozen=True)

    n_vehicles: List[int] = Field(default_factory=lambda: [50, 100, 200], min_length=1)
    flock_sizes: List[int] = Field(default_factory=lambda: [1, 3, 5, 7, 9], min_length=1)
    scales: List[float] = Field(default_factory=lambda: [0.25 * i for i in range(9)], min_length=1)
    trials: int = Field(default=20, ge=1)
    seed: int = 0
    appearance: SyntheticAppearanceConfig = Field(default_factory=SyntheticAppearanceConfig)

    @field_validator("n_vehicles", "flock_sizes")
    @classmethod
    def _sorted_unique_ints(cls, values: List[int]) -> List[int]:
        return sorted(set(values))

    @field_validator("scales")
    @classmethod
    def _valid_scales(cls, values: List[float]) -> List[float]:
        for value in values:
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"scales must be finite and non-negative, got {value}")
        return sorted(set(values))

    @model_validator(mode="after")
    def _flock_sizes_fit(self) -> "ExperimentConfig":
        if min(self.n_vehicles) < 1:
            raise ValueError("n_vehicles must be positive")
        smallest = min(self.n_vehicles)
        for k in self.flock_sizes:
            if k < 1 or k % 2 == 0:
                raise ValueError(f"flock sizes must be positive odd integers, got {k}")
            if k > smallest:
                raise ValueError(f"flock size {k} exceeds smallest list length {smallest}")
        return self


def build_experiment_config(values: dict) -> ExperimentConfig:
    """Validate raw values, surfacing pydantic errors as ConfigurationError."""
    try:
        return ExperimentConfig(**values)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid experiment config: {e}") from e


def load_experiment_config(config_file: Path, **overrides) -> ExperimentConfig:
    """
    Load experiment.yaml and apply non-None overrides on top.

    Scale grids in YAML may be a list or a "start..end:step" string.
    """
    config_file = Path(config_file)
    if not config_file.exists():
        raise ConfigurationError(f"Config file not found: {config_file}")
    with open(config_file, encoding="utf-8") as f:
        try:
            values = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Could not parse {config_file}: {e}") from e
    if not isinstance(values, dict):
        raise ConfigurationError(f"{config_file} must contain a mapping")

    if isinstance(values.get("scales"), str):
        values["scales"] = parse_scale_grid(values["scales"])
    values.update({key: value for key, value in overrides.items() if value is not None})
    return build_experiment_config(values)
