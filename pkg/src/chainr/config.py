"""Configuration management for chainr.

A ``.chainr`` directory is discovered by walking up from the working directory,
the same way Git finds ``.git``. Its config file overrides the built-in
defaults for sampling, verification output and builder normalization.
"""

import copy
import json
import logging
from pathlib import Path
from typing import Any, Optional, Union

import yaml

logger = logging.getLogger(__name__)

DEFAULTS: dict[str, Any] = {
    "sampling": {"seed": None, "bound": 7},
    "verify": {"preview_terms": 10},
    "builders": {"normalization": 1},
    "output": {"indent": 2},
}


def _merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ChainrConfig:
    """Configuration manager for chainr.

    Discovers .chainr directories by walking up from the current working
    directory and layers the config file found there over ``DEFAULTS``.
    """

    # Supported config file names within .chainr directory
    CONFIG_NAMES = ["config.yaml", "config.yml", "config.json", "config"]

    def __init__(self, start_path: Optional[Union[str, Path]] = None):
        """Initialize configuration manager.

        Args:
            start_path: Path to start searching for .chainr directory.
                       If None, starts from current working directory.
        """
        self.chainr_dir: Optional[Path] = None
        self.config_file: Optional[Path] = None
        self.config_data: dict[str, Any] = copy.deepcopy(DEFAULTS)

        start = Path(start_path) if start_path else Path.cwd()
        self._discover_chainr_directory(start)

        if self.chainr_dir:
            self._load_config()

    def _discover_chainr_directory(self, start_path: Path) -> None:
        current = start_path.resolve()

        for path in [current] + list(current.parents):
            chainr_dir = path / ".chainr"
            if chainr_dir.exists() and chainr_dir.is_dir():
                self.chainr_dir = chainr_dir
                logger.info(f"Found .chainr directory: {chainr_dir}")
                return

        logger.debug("No .chainr directory found")

    def _load_config(self) -> None:
        """Load configuration file from .chainr directory."""
        if not self.chainr_dir:
            return

        for config_name in self.CONFIG_NAMES:
            config_path = self.chainr_dir / config_name
            if config_path.exists() and config_path.is_file():
                self._load_config_file(config_path)
                return

        logger.debug(f"No config file found in {self.chainr_dir}")

    def _load_config_file(self, config_path: Path) -> None:
        """Load and parse a specific config file.

        Args:
            config_path: Path to the config file
        """
        try:
            self.config_file = config_path

            with open(config_path, encoding="utf-8") as f:
                if config_path.suffix == ".json":
                    loaded = json.load(f)
                else:
                    # YAML for .yaml, .yml and files without extension
                    loaded = yaml.safe_load(f) or {}

            if not isinstance(loaded, dict):
                raise ValueError("top level must be a mapping")
            self.config_data = _merge(DEFAULTS, loaded)
            logger.info(f"Loaded config from: {config_path}")

        except Exception as e:
            logger.error(f"Failed to load config from {config_path}: {e}")
            self.config_data = copy.deepcopy(DEFAULTS)

    def has_chainr_directory(self) -> bool:
        return self.chainr_dir is not None

    def get_chainr_directory(self) -> Optional[Path]:
        return self.chainr_dir

    def get_config_value(self, key: str, default: Any = None) -> Any:
        """Get a configuration value by key.

        Args:
            key: Configuration key (supports dot notation, e.g., 'sampling.seed')
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        keys = key.split(".")
        value: Any = self.config_data

        try:
            for k in keys:
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def get_project_root(self) -> Optional[Path]:
        """Get the project root directory (parent of .chainr)."""
        if self.chainr_dir:
            return self.chainr_dir.parent
        return None


# Global config instance
_global_config: Optional[ChainrConfig] = None


def get_config(start_path: Optional[Union[str, Path]] = None) -> ChainrConfig:
    """Get the global configuration instance.

    Args:
        start_path: Optional path to start searching for .chainr directory
                   (only used on first call)

    Returns:
        Global ChainrConfig instance
    """
    global _global_config

    if _global_config is None:
        _global_config = ChainrConfig(start_path)

    return _global_config


def reset_config() -> None:
    """Reset the global configuration instance.

    Useful for testing or when config needs to be reloaded.
    """
    global _global_config
    _global_config = None


def find_chainr_directory(start_path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    """Find .chainr directory by walking up from start_path."""
    config = ChainrConfig(start_path)
    return config.get_chainr_directory()
