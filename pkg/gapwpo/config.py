"""
Configuration loader for gapwpo.

Loads harness settings from gapwpo.json with sensible defaults.
"""

import copy
import json
import os
from typing import Any, Dict, Optional

from gapwpo.errors import UnknownProfile


# Default configuration
DEFAULT_CONFIG = {
    "harness": {
        "seed": 0,
        "alphabet": 3,
        "max_len": 4,
        "max_nodes": 7,
        "max_term_size": 6,
        "samples": 500,
        "stall_budget": 200,
        "bad_sequences": 20,
        "reify_max_nodes": 12,
    },
    "suites": {
        "seq-order-axioms": {"alphabet": 2, "max_len": 3},
        "tree-order-axioms": {"alphabet": 2, "max_nodes": 5},
        "bullet-order": {"alphabet": 3, "max_len": 3},
    },
    # Presets for check --profile: per-suite values layered over the two sections above
    "profiles": {
        "acceptance": {
            "ord-laws": {"samples": 100000, "max_term_size": 8},
            "seq-cancellation": {"samples": 100000},
            "bullet-order": {"max_len": 5},
            "embed-reflection": {"samples": 10000},
            "reify-descent": {"samples": 10000, "bad_sequences": 1000},
        },
    },
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """
    Configuration manager for gapwpo.

    Loads gapwpo.json from the working directory, layered over defaults.
    """

    def __init__(self, config_path: str = "gapwpo.json"):
        """
        Initialize configuration.

        Args:
            config_path: Path to config file (default: gapwpo.json in current directory)
        """
        self.config_path = config_path
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """
        Load configuration from file or use defaults.

        Returns:
            Configuration dictionary
        """
        if os.path.exists(self.config_path):
            try:
                with open(self.config_path, 'r') as f:
                    return _merge(DEFAULT_CONFIG, json.load(f))
            except (json.JSONDecodeError, IOError) as e:
                print(f"Warning: Could not load {self.config_path}: {e}")
                print("Using default configuration")
                return copy.deepcopy(DEFAULT_CONFIG)
        else:
            return copy.deepcopy(DEFAULT_CONFIG)

    def get(self, *keys: str, default: Any = None) -> Any:
        """
        Get nested config value.

        Args:
            *keys: Nested keys to traverse (e.g., "harness", "seed")
            default: Default value if key not found

        Returns:
            Config value or default

        Example:
            config.get("harness", "stall_budget")
            # Returns: 200
        """
        value = self.config
        for key in keys:
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default
        return value

    def get_harness_config(self) -> Dict[str, Any]:
        """
        Get the harness defaults (seed, caps, sample counts).

        Returns:
            Harness configuration dictionary
        """
        return self.get("harness", default=dict(DEFAULT_CONFIG["harness"]))

    def get_suite_config(self, suite_name: str, profile: Optional[str] = None) -> Dict[str, Any]:
        """
        Get harness settings for one suite.

        Per-suite overrides are layered over the harness section, and the
        suite's entry in the named profile over both.

        Args:
            suite_name: Registered suite name (e.g., "seq-equivalence")
            profile: Profile name (e.g., "acceptance"), or None

        Returns:
            Merged configuration dictionary

        Raises:
            UnknownProfile: If the profile is not configured
        """
        overrides = self.get("suites", suite_name, default={})
        merged = _merge(self.get_harness_config(), overrides)
        if profile is None:
            return merged
        profiles = self.get("profiles", default={})
        if profile not in profiles:
            raise UnknownProfile(
                f"Unknown profile: {profile}. Valid profiles: {', '.join(profiles)}"
            )
        return _merge(merged, profiles[profile].get(suite_name, {}))


# Global config instance
_config = None


def get_config() -> Config:
    """
    Get global configuration instance.

    Lazy-loads configuration on first access.

    Returns:
        Config instance
    """
    global _config
    if _config is None:
        _config = Config()
    return _config
