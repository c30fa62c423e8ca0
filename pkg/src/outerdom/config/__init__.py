"""Experiment configuration files.

Config search order:
1. Direct path (if it exists)
2. OUTERDOM_CONFIG_DIR env var
3. Built-in config directory
"""

import os
from pathlib import Path

import yaml

builtin_config_dir = Path(__file__).parent


def get_config_path(config_spec: str | Path) -> Path:
    """Get the path to a config file.

    Args:
        config_spec: Config file name or path (e.g., "verify", "verify.yaml" or "/path/to/config.yaml")

    Raises:
        FileNotFoundError: If config file is not found in any location
    """
    config_spec = Path(config_spec)
    if config_spec.suffix != ".yaml":
        config_spec = config_spec.with_suffix(".yaml")

    candidates = [
        Path(config_spec),
        Path(os.getenv("OUTERDOM_CONFIG_DIR", ".")) / config_spec.name,
        builtin_config_dir / config_spec.name,
    ]
    for candidate in candidates:
        if candidate.exists():
            return candidate.resolve()

    raise FileNotFoundError(
        f"Config not found: {config_spec}\n"
        f"Searched locations:\n" + "\n".join(f"  - {c}" for c in candidates)
    )


def load_config(config_spec: str | Path) -> dict:
    """Load a config file as a dictionary."""
    return yaml.safe_load(get_config_path(config_spec).read_text()) or {}


__all__ = ["builtin_config_dir", "get_config_path", "load_config"]
