"""Configuration management for etheta."""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from YAML file or return defaults.

    Args:
        config_path: Path to configuration file. If None, uses ETHETA_CONFIG
            and then the default locations.

    Returns:
        Configuration dictionary with merged defaults.
    """
    defaults: Dict[str, Any] = {
        "limits": {
            "point_limit": 16,
            "max_enumeration_points": 5,
        },
        "verify": {
            "max_points": 4,
            "max_map_points": 3,
            "max_chain_points": 3,
            "workers": None,
            "time_budget": None,
            "chunk_size": 64,
        },
        "output": {
            "format": None,
        },
    }

    if config_path is None:
        config_path = os.environ.get("ETHETA_CONFIG")
    if config_path is None:
        for path in [
            Path("config/etheta.yml"),
            Path("etheta.yml"),
            Path(".etheta/config.yml"),
        ]:
            if path.exists():
                config_path = str(path)
                break

    config = defaults
    if config_path and Path(config_path).exists():
        with open(config_path, "r", encoding="utf-8") as f:
            user_config = yaml.safe_load(f) or {}
        config = _deep_merge(defaults, user_config)

    workers = os.environ.get("ETHETA_WORKERS")
    if workers:
        config = _deep_merge(config, {"verify": {"workers": int(workers)}})
    return config


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Recursively merge override dict into base."""
    result = base.copy()
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        else:
            result[key] = value
    return result
