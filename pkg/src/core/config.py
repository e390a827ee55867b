"""Configuration Management Module.

This module loads the engine limits and obstruction settings from the
packaged TOML file, with an optional class-cap override from the
environment.
"""

import importlib.resources
import logging
import os
from typing import TypedDict, cast

import toml

logger = logging.getLogger(__name__)


# --- Type Definitions for Config ---
class LimitsConfig(TypedDict):
    """Hard resource limits."""

    max_class: int
    bch_max_class: int
    cohomology_max_dimension: int
    cohomology_component_limit: int
    weight_search_limit: int
    massey_class: int


class ObstructionConfig(TypedDict):
    """Settings of the obstruction battery."""

    nilpotency_depth: int
    full_battery: bool
    group_sample_size: int


class ReportConfig(TypedDict):
    """Report rendering settings."""

    caveat: str


class AppConfig(TypedDict):
    """Main application configuration structure."""

    limits: LimitsConfig
    obstruction: ObstructionConfig
    report: ReportConfig


# --- Constants ---
CONFIG_PATH_DESCRIPTION = "src/core/config.toml"
MAX_CLASS_ENV = "NILPRES_MAX_CLASS"

# --- Cached Configuration ---
_config: AppConfig | None = None


def _load_config() -> AppConfig:
    """Loads the TOML configuration file as a package resource."""
    try:
        files = importlib.resources.files("core")
        with files.joinpath("config.toml").open("r") as f:
            return cast(AppConfig, toml.load(f))
    except FileNotFoundError:
        raise FileNotFoundError(f"Configuration file not found. Ensure '{CONFIG_PATH_DESCRIPTION}' exists.") from None
    except toml.TomlDecodeError as e:
        raise ValueError(f"Error decoding config file: {e}") from e


def _apply_environment(config: AppConfig) -> AppConfig:
    """Applies the ``NILPRES_MAX_CLASS`` override, if set."""
    raw = os.environ.get(MAX_CLASS_ENV)
    if not raw:
        return config
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"{MAX_CLASS_ENV} must be a positive integer, got '{raw}'") from e
    if value < 1:
        raise ValueError(f"{MAX_CLASS_ENV} must be a positive integer, got '{raw}'")
    logger.info("max_class overridden to %d from %s", value, MAX_CLASS_ENV)
    config["limits"]["max_class"] = value
    return config


def get_config() -> AppConfig:
    """
    Retrieves the application configuration.
    The configuration is loaded once and cached for subsequent calls.
    """
    global _config
    if _config is None:
        _config = _apply_environment(_load_config())
    return _config


def reset_config() -> None:
    """Drops the cached configuration so the next call reloads it."""
    global _config
    _config = None
