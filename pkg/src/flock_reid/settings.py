"""Runtime settings (environment + config/runtime.yaml)."""

import os
from pathlib import Path
from typing import Optional

import yaml
from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import ConfigurationError

DEFAULT_ORACLE_CAP = 9

# 10! x 10 permutation table is about 290 MB
ORACLE_CAP_CEILING = 10

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR"}


class RuntimeSettings(BaseSettings):
    """Process-level knobs; every field can be set through FLOCK_REID_<NAME>."""

    model_config = SettingsConfigDict(env_prefix="FLOCK_REID_", extra="ignore")

    threads: int = Field(default=0, ge=0, description="Worker cap for sweeps (0 = cpu count)")
    log_level: str = "WARNING"
    oracle_cap: int = Field(default=DEFAULT_ORACLE_CAP, ge=1, le=ORACLE_CAP_CEILING)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in _LOG_LEVELS:
            raise ValueError(f"log level must be one of {sorted(_LOG_LEVELS)}")
        return level

    def worker_count(self) -> int:
        """Resolve the effective number of sweep workers."""
        if self.threads > 0:
            return self.threads
        return os.cpu_count() or 1


def load_runtime_settings(config_file: Optional[Path] = None) -> RuntimeSettings:
    """
    Build runtime settings.

    Values from the optional YAML file act as defaults; environment variables
    win over them.
    """
    file_values: dict = {}
    if config_file is not None:
        config_file = Path(config_file)
        if not config_file.exists():
            raise ConfigurationError(f"Config file not found: {config_file}")
        with open(config_file, encoding="utf-8") as f:
            file_values = yaml.safe_load(f) or {}

    env_names = {name for name in RuntimeSettings.model_fields if f"FLOCK_REID_{name.upper()}" in os.environ}
    init_values = {k: v for k, v in file_values.items() if k not in env_names}

    try:
        return RuntimeSettings(**init_values)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid runtime settings: {e}") from e
