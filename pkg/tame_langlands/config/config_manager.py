"""
Centralized configuration manager for tame_langlands
Merges built-in defaults, the user config file and a project config file, in that order
"""

import json
import os
import time
from pathlib import Path
from typing import Any

from tame_langlands.exceptions import InputError
from tame_langlands.utils.logger import log_error

DEFAULTS: dict[str, Any] = {
    "bound_group_order": 2000,
    "bound_dim": 8,
    "jobs": 1,
    "cache_dir": os.path.join("~", ".cache", "tame_langlands"),
    "output_format": "tsv",
    "sweep": {
        "primes": [3, 5, 7],
        "max_operator_order": 24,
        "max_summands": 4,
        "max_field_q": 49,
        "max_ramification": 12,
    },
}

USER_CONFIG_PATH = os.path.join("~", ".config", "tame_langlands", "config.json")
PROJECT_CONFIG_NAME = "tame_langlands.json"


class ConfigManager:
    """Configuration hierarchy: defaults < user file < project file < explicit overrides"""

    def __init__(self, project_config: str | None = None):
        self.project_config = project_config
        self._overrides: dict[str, Any] = {}
        self._cache: dict[str, Any] = {}
        self._cache_timeout = 300  # 5 minutes
        self._last_cache_time = 0.0

    def get_config_value(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value with hierarchy applied

        Args:
            key: Configuration key to fetch
            default: Default value if key not found anywhere

        Returns:
            Configuration value or default
        """
        if self._is_cache_valid() and key in self._cache:
            return self._cache[key]
        if not self._is_cache_valid():
            self._refresh_cache()

        value = DEFAULTS.get(key)
        for layer in (self._read_file(USER_CONFIG_PATH), self._read_project_config(), self._overrides):
            layer_value = layer.get(key)
            if isinstance(value, dict) and isinstance(layer_value, dict):
                value = self._deep_merge(value, layer_value)
            elif layer_value is not None:
                value = layer_value

        if value is None:
            value = default
        self._cache[key] = value
        return value

    def set_overrides(self, **values: Any) -> None:
        """Apply command-line values; ``None`` means "not given" and is skipped"""
        given = {k: v for k, v in values.items() if v is not None}
        self._validate_keys(given, "command line")
        self._overrides = self._deep_merge(self._overrides, given)
        self.clear_cache()

    def get_sweep_config(self) -> dict[str, Any]:
        """Bounds used by the acceptance sweeps"""
        return self.get_config_value("sweep", {})

    def get_cache_dir(self) -> Path:
        return Path(os.path.expanduser(str(self.get_config_value("cache_dir"))))

    def _read_project_config(self) -> dict[str, Any]:
        path = self.project_config or PROJECT_CONFIG_NAME
        return self._read_file(path, required=self.project_config is not None)

    def _read_file(self, path: str, required: bool = False) -> dict[str, Any]:
        full_path = os.path.expanduser(path)
        if not os.path.exists(full_path):
            if required:
                raise InputError(f"Config file not found: {path}")
            return {}
        try:
            with open(full_path) as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            log_error(f"Error reading {path}: {e}", "Config Manager")
            raise InputError(f"Unreadable config file {path}: {e}")
        if not isinstance(data, dict):
            raise InputError(f"Config file {path} must hold a JSON object")
        self._validate_keys(data, path)
        return data

    @staticmethod
    def _validate_keys(data: dict[str, Any], source: str) -> None:
        unknown = sorted(set(data) - set(DEFAULTS))
        if unknown:
            raise InputError(f"Unknown configuration keys in {source}: {', '.join(unknown)}")

    def _deep_merge(self, base: dict, override: dict) -> dict:
        """
        Deep merge two dictionaries, with override taking priority

        Args:
            base: Base dictionary
            override: Override dictionary (takes priority)

        Returns:
            Merged dictionary
        """
        result = base.copy()
        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value
        return result

    def _is_cache_valid(self) -> bool:
        return (time.time() - self._last_cache_time) < self._cache_timeout

    def _refresh_cache(self) -> None:
        self._cache.clear()
        self._last_cache_time = time.time()

    def clear_cache(self) -> None:
        """Clear the configuration cache"""
        self._cache.clear()
        self._last_cache_time = 0.0


# Global instance
_config_manager: ConfigManager | None = None


def get_config_manager() -> ConfigManager:
    """Get the global configuration manager instance"""
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager


def reset_config_manager(project_config: str | None = None) -> ConfigManager:
    """Replace the global instance, e.g. when ``--config`` is given"""
    global _config_manager
    _config_manager = ConfigManager(project_config)
    return _config_manager


def get_config_value(key: str, default: Any = None) -> Any:
    """Convenience function to get configuration value"""
    return get_config_manager().get_config_value(key, default)
