"""Configuration management for ctower."""

from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class BuildConfig(BaseModel):
    """Configuration for the stage machine and PID mode."""

    base_prime_window: int = Field(default=8, ge=0)
    check_every_stage: bool = Field(default=True)
    fail_fast: bool = Field(default=False)


class SamplingConfig(BaseModel):
    """Configuration for the randomized surrogate checks."""

    brute_force_bound: int = Field(default=500, ge=1)
    samples: int = Field(default=200, ge=0)
    coefficient_bound: int = Field(default=9, ge=1)
    budget: int = Field(default=4, ge=1)


class NumringConfig(BaseModel):
    """Configuration for number-ring decisions."""

    max_search_radius: Optional[int] = Field(default=None, ge=1)


class Config(BaseSettings):
    """Main configuration class with validation and hierarchy support."""

    model_config = SettingsConfigDict(
        env_prefix="CTOWER_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="forbid",
    )

    seed: int = Field(default=20240607)
    log_level: str = Field(default="WARNING", pattern="^(DEBUG|INFO|WARNING|ERROR)$")

    build: BuildConfig = Field(default_factory=BuildConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    numring: NumringConfig = Field(default_factory=NumringConfig)

    plugin_directories: List[Path] = Field(default_factory=list)

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_level(cls, v: Any) -> Any:
        if isinstance(v, str):
            return v.upper()
        return v

    @field_validator("plugin_directories", mode="before")
    @classmethod
    def validate_paths(cls, v: Any) -> List[Path]:
        """Convert string paths to Path objects."""
        if isinstance(v, (str, Path)):
            return [Path(v)]
        if isinstance(v, list):
            return [Path(item) for item in v]
        return v


def find_config_files() -> List[Path]:
    """Find configuration files, project first, then user."""
    config_files = []

    for config_file in (Path.cwd() / ".ctower.yaml", Path.cwd() / "ctower.yaml"):
        if config_file.exists():
            config_files.append(config_file)
            break

    user_config = Path.home() / ".config" / "ctower" / "config.yaml"
    if user_config.exists():
        config_files.append(user_config)

    return config_files


def load_yaml_config(config_path: Path) -> Dict[str, Any]:
    """Load configuration from a YAML file."""
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML in config file {config_path}: {e}")
    except OSError as e:
        raise ValueError(f"Error reading config file {config_path}: {e}")
    if not isinstance(data, dict):
        raise ValueError(f"Config file {config_path} must contain a mapping")
    return data


def merge_configs(*configs: Dict[str, Any]) -> Dict[str, Any]:
    """Merge multiple configuration dictionaries.

    Later configs override earlier ones. Nested dictionaries are merged recursively.
    """
    result: Dict[str, Any] = {}

    for config in configs:
        if not config:
            continue

        for key, value in config.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = merge_configs(result[key], value)
            else:
                result[key] = value

    return result


def load_config(config_path: Optional[Path] = None) -> Config:
    """Load configuration following the hierarchy.

    Configuration hierarchy (highest to lowest priority):
    1. Explicit config file path (if provided)
    2. Environment variables (CTOWER_*)
    3. Project configuration (.ctower.yaml)
    4. User configuration (~/.config/ctower/config.yaml)
    5. Default built-in configuration
    """
    config_data: Dict[str, Any] = {}

    if config_path is None:
        config_files = list(reversed(find_config_files()))
    else:
        config_files = [config_path]

    for config_file in config_files:
        config_data = merge_configs(config_data, load_yaml_config(config_file))

    # Init kwargs outrank the environment in pydantic-settings, so only pass
    # file values the environment does not override.
    env_config = Config()
    for key in list(config_data):
        if key in env_config.model_fields_set and config_path is None:
            config_data.pop(key)

    try:
        return Config(**config_data)
    except Exception as e:
        raise ValueError(f"Invalid configuration: {e}")


def default_config_dict() -> Dict[str, Any]:
    """Default configuration as a plain dictionary, for init-config."""
    return Config().model_dump(mode="json")
